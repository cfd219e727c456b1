#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "socular/error.hpp"
#include "socular/gkdim.hpp"
#include "socular/hollow.hpp"
#include "socular/zdiagram.hpp"

namespace socular {

/// Standard parabolic subalgebra given by its excluded simple roots Δ∖I and the
/// derived block type (n_1, ..., n_k).
struct ParabolicSetup {
    LieFamily g;
    std::set<int> excluded;
    std::vector<int> composition;
    /// Type D with n_k = 1 is read as (..., n_{k-1} + 1, 0); otherwise equal to composition.
    std::vector<int> normalized;
    /// 1-based slot of the tail block when the blocks are arranged almost
    /// descending; 0 for type A.
    int s_index = 0;

    int k() const { return static_cast<int>(composition.size()); }
    int tail() const { return normalized.back(); }
    std::vector<int> head() const { return {normalized.begin(), normalized.end() - 1}; }
};

namespace detail {

inline std::vector<int> normalize_composition(Family f, std::vector<int> comp)
{
    if (f == Family::D && comp.size() >= 2 && comp.back() == 1) {
        comp[comp.size() - 2] += 1;
        comp.back() = 0;
    }
    return comp;
}

inline int s_index_of(Family f, const std::vector<int>& normalized)
{
    if (f == Family::A)
        return 0;
    int tail = normalized.back();
    int s = 1;
    for (std::size_t j = 0; j + 1 < normalized.size(); ++j) {
        bool before = f == Family::D ? normalized[j] >= 2 * tail : normalized[j] > 2 * tail;
        s += before ? 1 : 0;
    }
    return s;
}

inline ParabolicSetup finish_setup(const LieFamily& g, std::set<int> excluded, std::vector<int> comp)
{
    ParabolicSetup s{g, std::move(excluded), comp, normalize_composition(g.family, comp), 0};
    s.s_index = s_index_of(g.family, s.normalized);
    return s;
}

} // namespace detail

inline ParabolicSetup parabolic_from_roots(const LieFamily& g, std::set<int> excluded)
{
    const int n = g.n;
    const int rank = g.family == Family::A ? n - 1 : n;
    for (int i : excluded)
        if (i < 1 || i > rank)
            throw domain_error("simple root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));

    std::vector<int> comp;
    int prev = 0;
    for (int c : excluded) {
        if (c >= n)
            continue;
        comp.push_back(c - prev);
        prev = c;
    }
    comp.push_back(n - prev);
    if (g.family != Family::A && excluded.contains(n))
        comp.push_back(0);
    return detail::finish_setup(g, std::move(excluded), std::move(comp));
}

/// Inverse of parabolic_from_roots: the excluded roots are the partial sums
/// p_1, ..., p_{k-1} (when n_k = 0 the last of these is n itself).
inline ParabolicSetup parabolic_from_composition(const LieFamily& g, const std::vector<int>& comp)
{
    if (comp.empty())
        throw domain_error("empty composition");
    int sum = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
        bool last = i + 1 == comp.size();
        bool zero_ok = last && g.family != Family::A && comp.size() >= 2;
        if (comp[i] < 0 || (comp[i] == 0 && !zero_ok))
            throw domain_error("composition entries must be positive (only a trailing n_k may be 0)");
        sum += comp[i];
    }
    if (sum != g.n)
        throw domain_error("composition sums to " + std::to_string(sum) + ", expected n = " + std::to_string(g.n));

    std::set<int> excluded;
    int p = 0;
    for (std::size_t i = 0; i + 1 < comp.size(); ++i)
        excluded.insert(p += comp[i]);
    return detail::finish_setup(g, std::move(excluded), comp);
}

/// dim 𝔲 = number of positive roots minus those of the Levi factor.
inline std::int64_t dim_nilradical(const ParabolicSetup& s)
{
    if (s.g.family == Family::A) {
        std::int64_t sq = 0;
        for (std::int64_t b : s.composition)
            sq += b * b;
        return (static_cast<std::int64_t>(s.g.n) * s.g.n - sq) / 2;
    }
    std::int64_t levi = 0;
    for (std::int64_t b : s.head())
        levi += b * (b - 1) / 2;
    std::int64_t t = s.tail();
    levi += s.g.family == Family::D ? t * t - t : t * t;
    return positive_roots(s.g) - levi;
}

/// λ restricted to the Levi factor is dominant integral (λ - ρ in the shifted
/// convention): every simple root α_i ∈ I pairs to a positive integer.
inline bool is_p_dominant(const Weight& w, const ParabolicSetup& s)
{
    detail::check_length(w, s.g);
    const int n = s.g.n;
    auto positive_int = [](const Rational& x) { return is_integer(x) && x > Rational(0); };
    for (int i = 1; i <= n; ++i) {
        if (s.excluded.contains(i))
            continue;
        if (i <= n - 1) {
            if (!positive_int(w[i - 1] - w[i]))
                return false;
            continue;
        }
        switch (s.g.family) {
        case Family::A: break;
        case Family::B:
            if (!positive_int(w[n - 1] * Rational(2)))
                return false;
            break;
        case Family::C:
            if (!positive_int(w[n - 1]))
                return false;
            break;
        case Family::D:
            if (!positive_int(w[n - 2] + w[n - 1]))
                return false;
            break;
        }
    }
    return true;
}

/// Integral in the sense used by the combinatorial criteria: all entries in ℤ
/// for B/C/D, a single class mod ℤ for A.
inline bool is_integral_weight(const Weight& w, Family f)
{
    if (f != Family::A)
        return w.all_integer();
    return std::ranges::all_of(w, [&](const Rational& x) { return is_integer(x - w[0]); });
}

enum class SocularReason { hollow_match, gk_equality, type_a_shape };

inline const char* to_string(SocularReason r)
{
    switch (r) {
    case SocularReason::hollow_match: return "hollow-match";
    case SocularReason::gk_equality: return "gk-equality";
    default: return "typeA-shape";
    }
}

struct SocularCertificate {
    bool verdict = false;
    std::int64_t gk = 0;
    std::int64_t dim_u = 0;
    SocularReason reason = SocularReason::gk_equality;
    std::optional<Partition> candidate_shape; ///< shape of P(λ^-), or P(λ)^t for type A
    std::optional<Partition> target_shape;    ///< Z-diagram shape, or the sorted composition for type A
    std::optional<HollowShape> candidate_hollow;
    std::optional<HollowShape> target_hollow;
};

inline ZDiagram z_diagram_of(const ParabolicSetup& s)
{
    if (s.g.family == Family::A)
        throw domain_error("type A parabolics have no Z-diagram");
    return z_diagram(s.tail(), s.head());
}

/// Decides whether L(λ) is socular in O^p. Integral weights use the tableau
/// criteria; everything else compares GK dimension with dim 𝔲.
inline SocularCertificate is_socular(const Weight& w, const ParabolicSetup& s)
{
    if (!is_p_dominant(w, s))
        throw domain_error("L(" + to_string(w) + ") is not in O^p");

    SocularCertificate cert;
    cert.gk = gk_dimension(w, s.g);
    cert.dim_u = dim_nilradical(s);

    const Family f = s.g.family;
    if (!is_integral_weight(w, f)) {
        cert.reason = SocularReason::gk_equality;
        cert.verdict = cert.gk == cert.dim_u;
    } else if (f == Family::A) {
        cert.reason = SocularReason::type_a_shape;
        cert.candidate_shape = transpose(rs_shape(w.entries()));
        cert.target_shape = Partition::from_unsorted(s.composition);
        cert.verdict = *cert.candidate_shape == *cert.target_shape;
    } else {
        cert.reason = SocularReason::hollow_match;
        const Parity par = f == Family::D ? Parity::even : Parity::odd;
        auto seq = doubled(w);
        cert.candidate_shape = rs_shape(std::span<const Rational>(seq));
        cert.target_shape = z_diagram_of(s).shape;
        cert.candidate_hollow = hollow(*cert.candidate_shape, par);
        cert.target_hollow = hollow(*cert.target_shape, par);
        cert.verdict = *cert.candidate_hollow == *cert.target_hollow;
    }

    if (cert.verdict && cert.gk != cert.dim_u)
        throw integrity_error("socular verdict with GK dimension " + std::to_string(cert.gk) +
                              " != dim u = " + std::to_string(cert.dim_u));
    return cert;
}

} // namespace socular
