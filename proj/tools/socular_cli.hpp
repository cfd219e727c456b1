#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "socular.hpp"

namespace socular::cli {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

enum Exit { ok = 0, usage = 1, domain = 2, integrity = 3 };

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Flags {
    std::string family;
    int n = 0;
    std::string weight;
    std::string parabolic;
    std::string excluded;
    int a0 = 0;
    std::string b;
    std::string partition;
    std::string doubling = "none";
    std::string check;
    oracle::EnumerationBudget budget;
    bool json = false;
};

// Values after parsing the text flags; filled eagerly so a malformed flag is
// reported no matter which subcommand runs.
struct Parsed {
    std::optional<Family> family;
    std::optional<Weight> weight;
    std::optional<std::vector<int>> parabolic;
    std::optional<std::vector<int>> excluded;
    std::optional<std::vector<int>> b;
    std::optional<Partition> partition;
};

inline Parsed parse_flags(const Flags& f)
{
    Parsed p;
    if (!f.family.empty())
        p.family = parse_family(f.family);
    if (!f.weight.empty())
        p.weight = parse_weight(f.weight);
    if (!f.parabolic.empty())
        p.parabolic = ::socular::detail::parse_int_list(f.parabolic, "--parabolic");
    if (!f.excluded.empty())
        p.excluded = ::socular::detail::parse_int_list(f.excluded, "--excluded");
    if (!f.b.empty())
        p.b = ::socular::detail::parse_int_list(f.b, "--b");
    if (!f.partition.empty())
        p.partition = parse_partition(f.partition);
    return p;
}

template <typename T>
const T& need(const std::optional<T>& v, const char* flag)
{
    if (!v)
        throw usage_error(std::string("missing required flag ") + flag);
    return *v;
}

inline LieFamily lie_family(const Flags& f, const Parsed& p)
{
    auto fam = need(p.family, "--family");
    if (f.n <= 0)
        throw usage_error("missing or non-positive --n");
    return LieFamily(fam, f.n);
}

inline OrbitFamily orbit_family(const Parsed& p)
{
    auto fam = need(p.family, "--family");
    switch (fam) {
    case Family::B: return OrbitFamily::B;
    case Family::C: return OrbitFamily::C;
    case Family::D: return OrbitFamily::D;
    default: throw usage_error("this subcommand needs --family B, C or D");
    }
}

inline ParabolicSetup setup(const Flags& f, const Parsed& p)
{
    auto g = lie_family(f, p);
    if (p.parabolic && p.excluded)
        throw usage_error("give either --parabolic or --excluded, not both");
    if (p.parabolic)
        return parabolic_from_composition(g, *p.parabolic);
    if (p.excluded)
        return parabolic_from_roots(g, std::set<int>(p.excluded->begin(), p.excluded->end()));
    throw usage_error("missing --parabolic or --excluded");
}

inline Weight weight_for(const Parsed& p, const LieFamily& g)
{
    auto w = need(p.weight, "--weight");
    if (static_cast<int>(w.size()) != g.n)
        throw usage_error("--weight has " + std::to_string(w.size()) + " entries but --n is " + std::to_string(g.n));
    return w;
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

inline int run_tableau(const Flags& f, const Parsed& p, std::ostream& out)
{
    auto w = need(p.weight, "--weight");
    std::vector<Rational> seq(w.begin(), w.end());
    if (f.doubling == "back")
        seq = doubled(w, Side::back);
    else if (f.doubling == "front")
        seq = doubled(w, Side::front);
    auto t = rs_tableau(seq);
    auto sh = shape(t);
    if (f.json) {
        auto j = diagram_json(sh);
        json rows = json::array();
        for (const auto& r : t.rows()) {
            json row = json::array();
            for (const auto& x : r)
                row.push_back(to_string(x));
            rows.push_back(row);
        }
        j["rows"] = rows;
        emit(out, j);
    } else {
        out << render(t) << "shape: " << to_string(sh) << '\n';
    }
    return ok;
}

inline int run_gkdim(const Flags& f, const Parsed& p, std::ostream& out)
{
    auto g = lie_family(f, p);
    auto b = gk_breakdown(weight_for(p, g), g);
    if (f.json)
        emit(out, breakdown_json(b));
    else
        out << b.value << '\n';
    return ok;
}

inline int run_socular(const Flags& f, const Parsed& p, std::ostream& out)
{
    auto s = setup(f, p);
    auto c = is_socular(weight_for(p, s.g), s);
    if (f.json) {
        emit(out, json(c));
        return ok;
    }
    out << "socular: " << bool_text(c.verdict) << '\n'
        << "gkdim: " << c.gk << '\n'
        << "dim_u: " << c.dim_u << '\n'
        << "reason: " << to_string(c.reason) << '\n';
    return ok;
}

inline int run_dimu(const Flags& f, const Parsed& p, std::ostream& out)
{
    auto d = dim_nilradical(setup(f, p));
    if (f.json)
        emit(out, json{{"dim_u", d}});
    else
        out << d << '\n';
    return ok;
}

inline int run_parabolic(const Flags& f, const Parsed& p, std::ostream& out)
{
    auto s = setup(f, p);
    if (f.json) {
        emit(out, setup_json(s));
        return ok;
    }
    using ::socular::detail::join;
    out << "excluded: " << join(s.excluded) << '\n'
        << "composition: " << join(s.composition) << '\n'
        << "normalized: " << join(s.normalized) << '\n'
        << "s_index: " << s.s_index << '\n'
        << "dim_u: " << dim_nilradical(s) << '\n';
    return ok;
}

inline int run_zdiagram(const Flags& f, const Parsed& p, std::ostream& out)
{
    auto bs = p.b.value_or(std::vector<int>{});
    auto z = z_diagram(f.a0, bs);
    auto fs = z_closed_forms(f.a0, bs);
    if (f.json) {
        auto j = zdiagram_json(z);
        j["f_b"] = fs.f_b;
        j["f_d"] = fs.f_d;
        emit(out, j);
    } else {
        out << to_string(z.shape) << '\n' << render_parity(z.shape);
    }
    return ok;
}

template <typename Op>
int run_partition_op(const Flags& f, const Parsed& p, std::ostream& out, Op op)
{
    auto fam = orbit_family(p);
    auto r = op(need(p.partition, "--partition"), fam);
    if (f.json)
        emit(out, diagram_json(r));
    else
        out << to_string(r) << '\n';
    return ok;
}

inline int run_richardson(const Flags& f, const Parsed& p, std::ostream& out)
{
    auto r = richardson_partition(setup(f, p));
    if (f.json) {
        emit(out, json(r));
        return ok;
    }
    out << to_string(r.partition) << '\n';
    if (r.very_even)
        out << "very even (numeral " << r.numeral.value_or("undetermined") << ")\n";
    return ok;
}

inline int run_oracle(const Flags& f, std::ostream& out)
{
    oracle::CheckReport rep;
    if (f.check == "collapse")
        rep = oracle::check_collapse(f.budget.max_total);
    else if (f.check == "halg")
        rep = oracle::check_halg(f.budget.max_total);
    else if (f.check == "socular")
        rep = oracle::check_socular(f.budget);
    else
        throw usage_error("--check must be collapse, halg or socular");
    if (f.json) {
        emit(out, json{{"check", rep.name}, {"checked", rep.checked}, {"failures", rep.failures}, {"ok", rep.ok()}});
    } else {
        out << rep.name << ": " << rep.checked << " checked, " << rep.failures.size() << " failures\n";
        for (const auto& line : rep.failures)
            out << "  " << line << '\n';
    }
    return rep.ok() ? ok : integrity;
}

} // namespace detail

/// Parses argv (without the program name) and runs one subcommand.
inline RunResult run(const std::vector<std::string>& args)
{
    RunResult res;
    std::ostringstream out;
    std::ostringstream err;

    CLI::App app{"Socular simple modules, GK dimension and Richardson orbits"};
    app.name("socular");
    app.require_subcommand(1);
    detail::Flags f;

    app.add_option("--family", f.family, "Lie type: A, B, C or D");
    app.add_option("--n", f.n, "Rank (number of weight coordinates)");
    app.add_option("--weight", f.weight, "Weight entries, e.g. -5,-6,-4,2 or 1/2,3/2");
    app.add_option("--parabolic", f.parabolic, "Block type n_1,...,n_k");
    app.add_option("--excluded", f.excluded, "Excluded simple roots, e.g. 2,3");
    app.add_option("--a0", f.a0, "Z-diagram a0");
    app.add_option("--b", f.b, "Z-diagram b_1,...,b_{k-1}");
    app.add_option("--partition", f.partition, "Partition, e.g. 7,5,5,3,3");
    app.add_flag("--json", f.json, "JSON output");

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"tableau", "RS tableau of a weight (optionally doubled)"},
        {"gkdim", "GK dimension of L(lambda)"},
        {"socular", "Decide socularity of L(lambda) in O^p"},
        {"dimu", "Dimension of the nilradical"},
        {"parabolic", "Show the block type of a parabolic"},
        {"zdiagram", "Z-diagram shape and parity grid"},
        {"halg", "H-algorithm of type B, C or D"},
        {"collapse", "B/C/D collapse"},
        {"expand", "B/C/D expansion"},
        {"richardson", "Richardson orbit partition"},
        {"oracle", "Brute-force cross-checks"},
    };
    std::map<std::string, CLI::App*> cmd;
    for (const auto& s : subs) {
        auto* c = app.add_subcommand(s.name, s.help);
        c->fallthrough();
        cmd[s.name] = c;
    }
    cmd["tableau"]->add_option("--double", f.doubling, "none, back (λ^-) or front (^-λ)")
        ->check(CLI::IsMember({"none", "back", "front"}));
    auto* orc = cmd["oracle"];
    orc->add_option("--check", f.check, "collapse, halg or socular")->required();
    orc->add_option("--max-total", f.budget.max_total, "Largest partition total");
    orc->add_option("--lo", f.budget.entry_lo, "Smallest weight entry");
    orc->add_option("--hi", f.budget.entry_hi, "Largest weight entry");
    orc->add_option("--max-n", f.budget.max_n, "Largest rank");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.exit_code = usage;
        res.err = std::string("error: ") + e.what() + "\n";
        return res;
    }

    try {
        auto p = detail::parse_flags(f);
        auto chosen = app.get_subcommands().front()->get_name();
        if (chosen == "tableau")
            res.exit_code = detail::run_tableau(f, p, out);
        else if (chosen == "gkdim")
            res.exit_code = detail::run_gkdim(f, p, out);
        else if (chosen == "socular")
            res.exit_code = detail::run_socular(f, p, out);
        else if (chosen == "dimu")
            res.exit_code = detail::run_dimu(f, p, out);
        else if (chosen == "parabolic")
            res.exit_code = detail::run_parabolic(f, p, out);
        else if (chosen == "zdiagram")
            res.exit_code = detail::run_zdiagram(f, p, out);
        else if (chosen == "halg")
            res.exit_code = detail::run_partition_op(f, p, out, [](const Partition& x, OrbitFamily o) { return h_algorithm(x, o); });
        else if (chosen == "collapse")
            res.exit_code = detail::run_partition_op(f, p, out, [](const Partition& x, OrbitFamily o) { return collapse(x, o); });
        else if (chosen == "expand")
            res.exit_code = detail::run_partition_op(f, p, out, [](const Partition& x, OrbitFamily o) { return expand(x, o); });
        else if (chosen == "richardson")
            res.exit_code = detail::run_richardson(f, p, out);
        else
            res.exit_code = detail::run_oracle(f, out);
    } catch (const usage_error& e) {
        res.exit_code = usage;
        err << "error: " << e.what() << '\n';
    } catch (const parse_error& e) {
        res.exit_code = usage;
        err << "error: " << e.what() << '\n';
    } catch (const domain_error& e) {
        res.exit_code = domain;
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        res.exit_code = integrity;
        err << "internal error: " << e.what() << '\n';
    }
    res.out = out.str();
    res.err += err.str();
    return res;
}

} // namespace socular::cli
