#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "socular/error.hpp"
#include "socular/gkdim.hpp"
#include "socular/hollow.hpp"
#include "socular/parabolic.hpp"
#include "socular/partition.hpp"
#include "socular/transforms.hpp"

// Brute-force reference implementations for checking the fast paths.

namespace socular::oracle {

namespace detail {

inline void partitions_rec(int rest, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (rest == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int v = std::min(rest, max_part); v >= 1; --v) {
        cur.push_back(v);
        partitions_rec(rest - v, v, cur, out);
        cur.pop_back();
    }
}

// Colexicographic: compare parts from the last one backwards.
inline bool colex_less(const Partition& a, const Partition& b)
{
    return std::lexicographical_compare(a.vec().rbegin(), a.vec().rend(), b.vec().rbegin(), b.vec().rend());
}

} // namespace detail

/// All partitions of m in colexicographic order. Cached; safe to call concurrently.
inline const std::vector<Partition>& partitions_of(int m)
{
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    if (m < 0)
        throw domain_error("partitions_of: negative total");
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(m, m, cur, out);
    std::ranges::sort(out, detail::colex_less);
    return cache.emplace(m, std::move(out)).first->second;
}

namespace detail {

inline int target_parity(OrbitFamily fam) { return fam == OrbitFamily::B ? 1 : 0; }

inline void require_parity(const Partition& p, OrbitFamily fam, const char* who)
{
    if (p.total() % 2 != target_parity(fam))
        throw domain_error(std::string(who) + ": total " + std::to_string(p.total()) + " has the wrong parity for type " +
                           to_char(fam));
}

// The element of `cands` dominating (want_max) or dominated by every other one.
inline std::optional<Partition> extremum(const std::vector<Partition>& cands, bool want_max)
{
    for (const auto& c : cands) {
        bool ok = std::ranges::all_of(cands, [&](const Partition& o) { return want_max ? dominates(c, o) : dominates(o, c); });
        if (ok)
            return c;
    }
    return std::nullopt;
}

} // namespace detail

/// Largest type-fam partition dominated by p, found by scanning all partitions.
inline Partition collapse_oracle(const Partition& p, OrbitFamily fam)
{
    detail::require_parity(p, fam, "collapse_oracle");
    std::vector<Partition> below;
    for (const auto& q : partitions_of(p.total()))
        if (is_orbit_partition(q, fam) && dominates(p, q))
            below.push_back(q);
    auto best = detail::extremum(below, true);
    if (!best)
        throw integrity_error("collapse_oracle: no unique maximum below " + to_string(p));
    return *best;
}

/// Smallest special type-fam partition dominating p.
inline Partition expand_oracle(const Partition& p, OrbitFamily fam)
{
    if (!is_orbit_partition(p, fam))
        throw domain_error("expand_oracle: " + to_string(p) + " is not of type " + to_char(fam));
    std::vector<Partition> above;
    for (const auto& q : partitions_of(p.total()))
        if (is_orbit_partition(q, fam) && is_special(q, fam) && dominates(q, p))
            above.push_back(q);
    auto best = detail::extremum(above, false);
    if (!best)
        throw integrity_error("expand_oracle: no unique minimum above " + to_string(p));
    return *best;
}

/// Special type-fam partitions of the H-algorithm's target total whose odd
/// (B, C) or even (D) boxes coincide with those of p.
inline std::vector<Partition> restricted_candidates(const Partition& p, OrbitFamily fam)
{
    const Parity par = fam == OrbitFamily::D ? Parity::even : Parity::odd;
    const auto want = hollow(p, par);
    const int total = p.total() + (fam == OrbitFamily::B ? 1 : 0);
    std::vector<Partition> out;
    for (const auto& q : partitions_of(total))
        if (is_orbit_partition(q, fam) && is_special(q, fam) && hollow(q, par) == want)
            out.push_back(q);
    return out;
}

/// Reference value for h_algorithm: the dominance-least special partition of
/// the target total carrying the same kept boxes as p.
inline Partition restricted_transform_oracle(const Partition& p, OrbitFamily fam)
{
    if (!is_domino_type(p))
        throw domain_error("restricted_transform_oracle: " + to_string(p) + " is not of domino type");
    auto cands = restricted_candidates(p, fam);
    if (cands.empty())
        throw integrity_error("restricted_transform_oracle: no special partition shares the boxes of " + to_string(p));
    auto best = detail::extremum(cands, false);
    if (!best)
        throw integrity_error("restricted_transform_oracle: candidates for " + to_string(p) + " have no minimum");
    return *best;
}

/// Cells of one parity by direct enumeration.
inline int count_cells(const Partition& p, std::size_t row, Parity par)
{
    int k = static_cast<int>(row) + 1;
    int c = 0;
    for (int l = 1; l <= p[row]; ++l)
        c += parity_of({k, l}) == par ? 1 : 0;
    return c;
}

struct EnumerationBudget {
    int max_total = 14;
    int entry_lo = -6;
    int entry_hi = 6;
    int max_n = 4;
};

struct EnumerationResult {
    std::optional<std::int64_t> max_gk; ///< unset when no weight in the window is p-dominant
    std::vector<Weight> socular_weights;
    std::size_t examined = 0;
};

/// Calls f on every integral weight of length n with entries in [lo, hi].
template <typename F>
void for_each_integral_weight(int n, int lo, int hi, F&& f)
{
    if (lo > hi)
        return;
    std::vector<int> v(static_cast<std::size_t>(n), lo);
    for (;;) {
        std::vector<Rational> entries(v.begin(), v.end());
        f(Weight(std::move(entries)));
        int i = n - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == hi)
            v[static_cast<std::size_t>(i--)] = lo;
        if (i < 0)
            return;
        ++v[static_cast<std::size_t>(i)];
    }
}

/// Maximum GK dimension over the p-dominant integral weights in the window,
/// and the weights attaining it.
inline EnumerationResult socular_enumeration(const ParabolicSetup& s, const EnumerationBudget& b)
{
    EnumerationResult r;
    for_each_integral_weight(s.g.n, b.entry_lo, b.entry_hi, [&](Weight w) {
        if (!is_p_dominant(w, s))
            return;
        ++r.examined;
        auto gk = gk_dimension(w, s.g);
        if (!r.max_gk || gk > *r.max_gk) {
            r.max_gk = gk;
            r.socular_weights.clear();
        }
        if (gk == *r.max_gk)
            r.socular_weights.push_back(std::move(w));
    });
    return r;
}

/// Every parabolic of g, one per subset of excluded simple roots.
inline std::vector<ParabolicSetup> all_parabolics(const LieFamily& g)
{
    const int rank = g.family == Family::A ? g.n - 1 : g.n;
    std::vector<ParabolicSetup> out;
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
        std::set<int> ex;
        for (int i = 0; i < rank; ++i)
            if (mask >> i & 1u)
                ex.insert(i + 1);
        out.push_back(parabolic_from_roots(g, std::move(ex)));
    }
    return out;
}

struct CheckReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

inline CheckReport check_collapse(int max_total)
{
    CheckReport rep{"collapse", 0, {}};
    for (int m = 1; m <= max_total; ++m) {
        for (const auto& p : partitions_of(m)) {
            for (auto fam : {OrbitFamily::B, OrbitFamily::C, OrbitFamily::D}) {
                if (m % 2 != detail::target_parity(fam))
                    continue;
                ++rep.checked;
                auto fast = collapse(p, fam);
                auto slow = collapse_oracle(p, fam);
                if (fast != slow)
                    rep.failures.push_back(std::string(1, to_char(fam)) + " collapse " + to_string(p) + ": " +
                                           to_string(fast) + " vs oracle " + to_string(slow));
                if (is_orbit_partition(p, fam)) {
                    auto e = expand(p, fam);
                    auto eo = expand_oracle(p, fam);
                    if (e != eo)
                        rep.failures.push_back(std::string(1, to_char(fam)) + " expand " + to_string(p) + ": " +
                                               to_string(e) + " vs oracle " + to_string(eo));
                }
            }
        }
    }
    return rep;
}

inline CheckReport check_halg(int max_total)
{
    CheckReport rep{"halg", 0, {}};
    for (int m = 2; m <= max_total; m += 2) {
        for (const auto& p : partitions_of(m)) {
            if (!is_domino_type(p))
                continue;
            for (auto fam : {OrbitFamily::B, OrbitFamily::C, OrbitFamily::D}) {
                ++rep.checked;
                std::string tag = std::string(1, to_char(fam)) + " " + to_string(p) + ": ";
                try {
                    auto fast = h_algorithm(p, fam);
                    auto slow = restricted_transform_oracle(p, fam);
                    if (fast != slow)
                        rep.failures.push_back(tag + to_string(fast) + " vs oracle " + to_string(slow));
                } catch (const std::exception& e) {
                    rep.failures.push_back(tag + e.what());
                }
            }
        }
    }
    return rep;
}

/// For every family and rank up to max_n and every parabolic: the weights the
/// criterion accepts are exactly those attaining max GK dimension, and that
/// maximum is dim 𝔲.
inline CheckReport check_socular(const EnumerationBudget& b)
{
    CheckReport rep{"socular", 0, {}};
    for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
        int lo = (f == Family::A || f == Family::D) ? 2 : 1;
        for (int n = lo; n <= b.max_n; ++n) {
            for (const auto& s : all_parabolics(LieFamily(f, n))) {
                ++rep.checked;
                std::string tag = std::string(1, to_char(f)) + std::to_string(n) + " (" + ::socular::detail::join(s.composition) + "): ";
                auto du = dim_nilradical(s);
                auto en = socular_enumeration(s, b);
                if (en.max_gk && *en.max_gk != du)
                    rep.failures.push_back(tag + "max GK " + std::to_string(*en.max_gk) + " != dim u " + std::to_string(du));
                std::set<std::vector<Rational>> attaining;
                if (en.max_gk && *en.max_gk == du)
                    for (const auto& w : en.socular_weights)
                        attaining.insert(std::vector<Rational>(w.begin(), w.end()));
                std::set<std::vector<Rational>> accepted;
                for_each_integral_weight(n, b.entry_lo, b.entry_hi, [&](const Weight& w) {
                    if (is_p_dominant(w, s) && is_socular(w, s).verdict)
                        accepted.insert(std::vector<Rational>(w.begin(), w.end()));
                });
                if (accepted != attaining)
                    rep.failures.push_back(tag + std::to_string(accepted.size()) + " accepted vs " +
                                           std::to_string(attaining.size()) + " attaining dim u");
            }
        }
    }
    return rep;
}

} // namespace socular::oracle
