#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socular/detail/text.hpp"
#include "socular/error.hpp"

namespace socular {

/// Weakly decreasing sequence of positive integers. Doubles as a Young
/// diagram shape and as a nilpotent-orbit label. Trailing zeros are never
/// stored.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw domain_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw domain_error("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary non-negative parts into a partition.
    static Partition from_unsorted(std::vector<int> parts)
    {
        std::ranges::sort(parts, std::greater<>{});
        return Partition(std::move(parts));
    }

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// 0-based access.
    int operator[](std::size_t i) const { return parts_[i]; }

    /// 1-based access; rows past the end have length 0.
    int row(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Comma-separated, weakly decreasing positive integers, e.g. `7,5,5,3,3`.
inline Partition parse_partition(std::string_view text)
{
    auto parts = detail::parse_int_list(text, "partition");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw parse_error("partition must be weakly decreasing positive integers: '" +
                              std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

inline std::string to_string(const Partition& p) { return detail::join(p.vec()); }

inline Partition transpose(const Partition& p)
{
    if (p.empty())
        return {};
    std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
    for (int len : p)
        for (int j = 0; j < len; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

/// Prefix sums of `d` (zero padded) weakly exceed those of `f`.
inline bool dominates(const Partition& d, const Partition& f)
{
    if (d.total() != f.total())
        throw domain_error("dominance compares partitions of the same total (" +
                           std::to_string(d.total()) + " vs " + std::to_string(f.total()) + ")");
    int sd = 0;
    int sf = 0;
    for (std::size_t i = 0; i < std::max(d.length(), f.length()); ++i) {
        sd += i < d.length() ? d[i] : 0;
        sf += i < f.length() ? f[i] : 0;
        if (sd < sf)
            return false;
    }
    return true;
}

enum class OrbitFamily { B, C, D };

inline char to_char(OrbitFamily f) { return f == OrbitFamily::B ? 'B' : f == OrbitFamily::C ? 'C' : 'D'; }

namespace detail {

/// Parity (0 even, 1 odd) of the parts that must come with even multiplicity.
inline int restricted_parity(OrbitFamily fam) { return fam == OrbitFamily::C ? 1 : 0; }

inline bool total_parity_ok(int total, OrbitFamily fam)
{
    return fam == OrbitFamily::B ? total % 2 == 1 : total % 2 == 0;
}

/// Largest part of the restricted parity that occurs with odd multiplicity, or 0.
inline int largest_bad_part(const std::vector<int>& parts, OrbitFamily fam)
{
    int parity = restricted_parity(fam);
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (parts[i] % 2 == parity && (j - i) % 2 == 1)
            return parts[i];
        i = j;
    }
    return 0;
}

} // namespace detail

/// B: total odd, even parts with even multiplicity.
/// C: total even, odd parts with even multiplicity.
/// D: total even, even parts with even multiplicity.
inline bool is_orbit_partition(const Partition& p, OrbitFamily fam)
{
    return detail::total_parity_ok(p.total(), fam) && detail::largest_bad_part(p.vec(), fam) == 0;
}

/// Transpose test: B needs a type-B transpose, C and D a type-C transpose.
inline bool is_special(const Partition& p, OrbitFamily fam)
{
    if (!is_orbit_partition(p, fam))
        throw domain_error("is_special: " + to_string(p) + " is not a type-" + to_char(fam) +
                           " partition");
    return is_orbit_partition(transpose(p), fam == OrbitFamily::B ? OrbitFamily::B : OrbitFamily::C);
}

/// Largest type-`fam` partition dominated by `p`.
///
/// Repeatedly takes the largest offending part q, lowers its last occurrence
/// to q-1 and raises the first later part r < q-1 to r+1 (a missing part
/// counts as 0, so this may append a part 1).
inline Partition collapse(const Partition& p, OrbitFamily fam)
{
    if (!detail::total_parity_ok(p.total(), fam))
        throw domain_error("collapse: total " + std::to_string(p.total()) +
                           " has the wrong parity for type " + to_char(fam));
    std::vector<int> parts = p.vec();
    while (int q = detail::largest_bad_part(parts, fam)) {
        auto last = parts.size() - 1;
        while (parts[last] != q)
            --last;
        parts[last] = q - 1;
        auto r = last + 1;
        while (r < parts.size() && parts[r] >= q - 1)
            ++r;
        if (r == parts.size())
            parts.push_back(1);
        else
            ++parts[r];
    }
    return Partition(std::move(parts));
}

/// Smallest special type-`fam` partition dominating `p`: the transpose of the
/// collapse of the transpose (B-collapse for B, C-collapse for C and D).
inline Partition expand(const Partition& p, OrbitFamily fam)
{
    if (!is_orbit_partition(p, fam))
        throw domain_error("expand: " + to_string(p) + " is not a type-" + to_char(fam) +
                           " partition");
    auto dual_family = fam == OrbitFamily::B ? OrbitFamily::B : OrbitFamily::C;
    return transpose(collapse(transpose(p), dual_family));
}

} // namespace socular
