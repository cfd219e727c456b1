#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socular/detail/text.hpp"
#include "socular/error.hpp"
#include "socular/rational.hpp"

namespace socular {

/// Highest weight in the coordinates (λ_1, ..., λ_n). L(λ) has highest
/// weight λ − ρ; ρ itself is never materialized.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Rational> entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool all_integer() const { return std::ranges::all_of(entries_, is_integer); }

    bool operator==(const Weight&) const = default;

private:
    std::vector<Rational> entries_;
};

/// Comma-separated entries, each `a`, `-a` or `a/b`.
inline Weight parse_weight(std::string_view text)
{
    std::vector<Rational> entries;
    for (auto field : detail::split_csv(text, "weight"))
        entries.push_back(parse_rational(field));
    if (entries.empty())
        throw parse_error("weight must have at least one entry");
    return Weight(std::move(entries));
}

inline std::string to_string(const Weight& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ',';
        out += to_string(w[i]);
    }
    return out;
}

enum class Side { back, front };

/// back:  (x_1..x_n, -x_n..-x_1)
/// front: (-x_n..-x_1, x_1..x_n)
inline std::vector<Rational> doubled(std::span<const Rational> x, Side side = Side::back)
{
    std::vector<Rational> out;
    out.reserve(2 * x.size());
    if (side == Side::back) {
        out.assign(x.begin(), x.end());
        for (auto it = x.rbegin(); it != x.rend(); ++it)
            out.push_back(-*it);
    } else {
        for (auto it = x.rbegin(); it != x.rend(); ++it)
            out.push_back(-*it);
        out.insert(out.end(), x.begin(), x.end());
    }
    return out;
}

inline std::vector<Rational> doubled(const Weight& w, Side side = Side::back)
{
    return doubled(w.entries(), side);
}

struct IndexedEntry {
    std::size_t position; // 0-based index into the weight
    Rational value;

    bool operator==(const IndexedEntry&) const = default;
};

using IndexedSubsequence = std::vector<IndexedEntry>;

inline std::vector<Rational> values(const IndexedSubsequence& xs)
{
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (const auto& e : xs)
        out.push_back(e.value);
    return out;
}

enum class Grouping {
    type_a, // same class iff the difference is an integer
    bcd,    // same class iff the difference or the sum is an integer
};

struct CongruenceSplit {
    Grouping grouping = Grouping::bcd;
    std::optional<IndexedSubsequence> integral_class;
    std::optional<IndexedSubsequence> half_integral_class;
    /// Classes in [λ]_3 for bcd, every class for type_a; ordered by first position.
    std::vector<IndexedSubsequence> other_classes;
};

namespace detail {

// Class representative of x: x mod ℤ for type A, and x mod ℤ up to sign for BCD,
// which lands in [0, 1/2].
inline Rational congruence_key(const Rational& x, Grouping grouping)
{
    auto r = frac(x);
    if (grouping == Grouping::type_a || r == Rational(0))
        return r;
    auto s = Rational(1) - r;
    return s < r ? s : r;
}

} // namespace detail

inline CongruenceSplit congruence_decompose(const Weight& w, Grouping grouping)
{
    std::vector<Rational> keys;
    std::vector<IndexedSubsequence> classes;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto key = detail::congruence_key(w[i], grouping);
        auto it = std::ranges::find(keys, key);
        if (it == keys.end()) {
            keys.push_back(key);
            classes.emplace_back();
            it = std::prev(keys.end());
        }
        classes[static_cast<std::size_t>(it - keys.begin())].push_back({i, w[i]});
    }

    CongruenceSplit split;
    split.grouping = grouping;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (grouping == Grouping::bcd && keys[c] == Rational(0))
            split.integral_class = std::move(classes[c]);
        else if (grouping == Grouping::bcd && keys[c] == Rational(1, 2))
            split.half_integral_class = std::move(classes[c]);
        else
            split.other_classes.push_back(std::move(classes[c]));
    }
    return split;
}

/// x̃ for a class of [λ]_3: the entries congruent to the first entry (mod ℤ),
/// followed by the negatives of the remaining entries in reverse order.
inline std::vector<Rational> tilde(std::span<const Rational> x)
{
    if (x.empty())
        return {};
    std::vector<Rational> head;
    std::vector<Rational> rest;
    for (const auto& v : x) {
        if (is_integer(v - x.front()))
            head.push_back(v);
        else
            rest.push_back(v);
    }
    for (auto it = rest.rbegin(); it != rest.rend(); ++it)
        head.push_back(-*it);
    return head;
}

inline std::vector<Rational> tilde(const IndexedSubsequence& x)
{
    auto v = values(x);
    return tilde(std::span<const Rational>(v));
}

} // namespace socular
