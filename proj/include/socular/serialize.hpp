#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "socular/gkdim.hpp"
#include "socular/hollow.hpp"
#include "socular/parabolic.hpp"
#include "socular/partition.hpp"
#include "socular/richardson.hpp"
#include "socular/zdiagram.hpp"

// JSON forms. Partitions are integer arrays, cells are [row, col] pairs and
// rationals are strings such as "-3/4".

namespace socular {

using json = nlohmann::json;

inline void to_json(json& j, const Partition& p) { j = p.vec(); }
inline void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

inline void to_json(json& j, const Cell& c) { j = json::array({c.row, c.col}); }
inline void from_json(const json& j, Cell& c)
{
    if (!j.is_array() || j.size() != 2)
        throw parse_error("cell must be a [row, col] pair");
    c = {j[0].get<int>(), j[1].get<int>()};
}

inline json cells_json(const HollowShape& h) { return json(std::vector<Cell>(h.cells().begin(), h.cells().end())); }

inline void to_json(json& j, const HollowShape& h) { j = {{"parity", to_string(h.parity())}, {"cells", cells_json(h)}}; }
inline void from_json(const json& j, HollowShape& h)
{
    auto par = j.at("parity").get<std::string>();
    if (par != "odd" && par != "even")
        throw parse_error("parity must be \"odd\" or \"even\"");
    auto cells = j.at("cells").get<std::vector<Cell>>();
    h = HollowShape(par == "odd" ? Parity::odd : Parity::even, std::set<Cell>(cells.begin(), cells.end()));
}

/// shape, transpose and both parity classes of a diagram.
inline json diagram_json(const Partition& p)
{
    return {{"shape", p},
            {"transpose", transpose(p)},
            {"odd_cells", cells_json(hollow(p, Parity::odd))},
            {"even_cells", cells_json(hollow(p, Parity::even))}};
}

inline SocularReason parse_reason(const std::string& s)
{
    for (auto r : {SocularReason::hollow_match, SocularReason::gk_equality, SocularReason::type_a_shape})
        if (s == to_string(r))
            return r;
    throw parse_error("unknown socular reason '" + s + "'");
}

inline void to_json(json& j, const SocularCertificate& c)
{
    j = {{"socular", c.verdict}, {"gkdim", c.gk}, {"dim_u", c.dim_u}, {"reason", to_string(c.reason)}};
    if (c.candidate_shape)
        j["shape"] = *c.candidate_shape;
    if (c.target_shape)
        j["target_shape"] = *c.target_shape;
    if (c.candidate_hollow)
        j["candidate_hollow"] = *c.candidate_hollow;
    if (c.target_hollow)
        j["target_hollow"] = *c.target_hollow;
}

inline void from_json(const json& j, SocularCertificate& c)
{
    c = {};
    c.verdict = j.at("socular").get<bool>();
    c.gk = j.at("gkdim").get<std::int64_t>();
    c.dim_u = j.at("dim_u").get<std::int64_t>();
    c.reason = parse_reason(j.at("reason").get<std::string>());
    if (j.contains("shape"))
        c.candidate_shape = j["shape"].get<Partition>();
    if (j.contains("target_shape"))
        c.target_shape = j["target_shape"].get<Partition>();
    if (j.contains("candidate_hollow"))
        c.candidate_hollow = j["candidate_hollow"].get<HollowShape>();
    if (j.contains("target_hollow"))
        c.target_hollow = j["target_hollow"].get<HollowShape>();
}

inline void to_json(json& j, const RichardsonResult& r)
{
    j = {{"richardson", r.partition}, {"very_even", r.very_even}};
    if (r.numeral)
        j["numeral"] = *r.numeral;
}

inline void from_json(const json& j, RichardsonResult& r)
{
    r = {};
    r.partition = j.at("richardson").get<Partition>();
    r.very_even = j.at("very_even").get<bool>();
    if (j.contains("numeral"))
        r.numeral = j["numeral"].get<std::string>();
}

inline json breakdown_json(const GkBreakdown& b)
{
    json classes = json::array();
    for (const auto& c : b.classes) {
        std::vector<std::string> seq;
        for (const auto& x : c.sequence)
            seq.push_back(to_string(x));
        classes.push_back({{"kind", to_string(c.kind)},
                           {"positions", c.positions},
                           {"sequence", seq},
                           {"shape", c.shape},
                           {"statistic", to_string(c.statistic)},
                           {"value", c.value}});
    }
    return {{"gkdim", b.value}, {"ambient", b.ambient}, {"classes", classes}};
}

inline json setup_json(const ParabolicSetup& s)
{
    return {{"family", std::string(1, to_char(s.g.family))},
            {"n", s.g.n},
            {"excluded", std::vector<int>(s.excluded.begin(), s.excluded.end())},
            {"composition", s.composition},
            {"normalized", s.normalized},
            {"s_index", s.s_index},
            {"dim_u", dim_nilradical(s)}};
}

inline json zdiagram_json(const ZDiagram& z)
{
    auto j = diagram_json(z.shape);
    j["a0"] = z.a0;
    j["b"] = z.bs;
    j["column_heights"] = z.column_heights;
    return j;
}

} // namespace socular
