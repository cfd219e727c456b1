#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "socular/error.hpp"
#include "socular/hollow.hpp"
#include "socular/weights.hpp"

namespace socular {

enum class Family { A, B, C, D };

inline char to_char(Family f) { return "ABCD"[static_cast<int>(f)]; }

inline Family parse_family(std::string_view text)
{
    if (text == "A") return Family::A;
    if (text == "B") return Family::B;
    if (text == "C") return Family::C;
    if (text == "D") return Family::D;
    throw parse_error("unknown family '" + std::string(text) + "' (expected A, B, C or D)");
}

/// A: sl(n), B: so(2n+1), C: sp(n) of rank n, D: so(2n). n counts weight coordinates.
struct LieFamily {
    Family family;
    int n;

    LieFamily(Family f, int rank) : family(f), n(rank)
    {
        int lo = (f == Family::A || f == Family::D) ? 2 : 1;
        if (rank < lo)
            throw domain_error(std::string("rank of type ") + to_char(f) + " must be at least " + std::to_string(lo));
    }

    /// The orbit family of the classical group; A has none.
    OrbitFamily orbit_family() const
    {
        switch (family) {
        case Family::B: return OrbitFamily::B;
        case Family::C: return OrbitFamily::C;
        case Family::D: return OrbitFamily::D;
        default: throw domain_error("type A has no orbit family");
        }
    }

    bool operator==(const LieFamily&) const = default;
};

/// n(n-1)/2, n^2 or n^2-n: the number of positive roots.
inline std::int64_t positive_roots(const LieFamily& g)
{
    std::int64_t n = g.n;
    switch (g.family) {
    case Family::A: return n * (n - 1) / 2;
    case Family::D: return n * n - n;
    default: return n * n;
    }
}

struct ClassContribution {
    enum class Kind { integral, half_integral, other };
    Kind kind;
    std::vector<std::size_t> positions; // 0-based
    std::vector<Rational> sequence;     // what is fed to RS insertion
    Partition shape;
    Statistic statistic;
    std::int64_t value;
};

inline const char* to_string(ClassContribution::Kind k)
{
    switch (k) {
    case ClassContribution::Kind::integral: return "integral";
    case ClassContribution::Kind::half_integral: return "half-integral";
    default: return "other";
    }
}

struct GkBreakdown {
    LieFamily g;
    std::int64_t ambient;
    std::vector<ClassContribution> classes;
    std::int64_t value;
};

namespace detail {

inline ClassContribution contribution(ClassContribution::Kind kind, const IndexedSubsequence& cls,
                                      std::vector<Rational> seq, Statistic stat)
{
    ClassContribution c{kind, {}, std::move(seq), {}, stat, 0};
    for (const auto& e : cls)
        c.positions.push_back(e.position);
    c.shape = rs_shape(std::span<const Rational>(c.sequence));
    c.value = f_stat(c.shape, stat);
    return c;
}

inline void check_length(const Weight& w, const LieFamily& g)
{
    if (static_cast<int>(w.size()) != g.n)
        throw domain_error("weight has " + std::to_string(w.size()) + " entries, expected " + std::to_string(g.n));
}

} // namespace detail

/// GK dimension of L(λ) together with the per-class terms that are subtracted
/// from the number of positive roots.
inline GkBreakdown gk_breakdown(const Weight& w, const LieFamily& g)
{
    detail::check_length(w, g);
    GkBreakdown out{g, positive_roots(g), {}, 0};
    using Kind = ClassContribution::Kind;

    if (g.family == Family::A) {
        auto split = congruence_decompose(w, Grouping::type_a);
        for (const auto& cls : split.other_classes)
            out.classes.push_back(detail::contribution(Kind::other, cls, values(cls), Statistic::a));
    } else {
        auto split = congruence_decompose(w, Grouping::bcd);
        Statistic int_stat = g.family == Family::D ? Statistic::d : Statistic::b;
        Statistic half_stat = g.family == Family::B ? Statistic::b : Statistic::d;
        if (split.integral_class) {
            auto v = values(*split.integral_class);
            out.classes.push_back(detail::contribution(Kind::integral, *split.integral_class,
                                                       doubled(std::span<const Rational>(v)), int_stat));
        }
        if (split.half_integral_class) {
            auto v = values(*split.half_integral_class);
            out.classes.push_back(detail::contribution(Kind::half_integral, *split.half_integral_class,
                                                       doubled(std::span<const Rational>(v)), half_stat));
        }
        for (const auto& cls : split.other_classes)
            out.classes.push_back(detail::contribution(Kind::other, cls, tilde(cls), Statistic::a));
    }

    out.value = out.ambient;
    for (const auto& c : out.classes)
        out.value -= c.value;
    if (out.value < 0)
        throw integrity_error("negative GK dimension");
    return out;
}

inline std::int64_t gk_dimension(const Weight& w, const LieFamily& g) { return gk_breakdown(w, g).value; }

/// The integral-weight formula: n(n-1)/2 - F_a(λ), n^2 - F_b(λ^-), or n^2 - n - F_d(λ^-).
inline std::int64_t gk_dimension_integral(const Weight& w, const LieFamily& g)
{
    detail::check_length(w, g);
    if (g.family == Family::A)
        return positive_roots(g) - f_stat(w.entries(), Statistic::a);
    auto seq = doubled(w);
    auto stat = g.family == Family::D ? Statistic::d : Statistic::b;
    return positive_roots(g) - f_stat(std::span<const Rational>(seq), stat);
}

} // namespace socular
