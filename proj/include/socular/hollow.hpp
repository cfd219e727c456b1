#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "socular/partition.hpp"
#include "socular/tableau.hpp"

namespace socular {

/// Box (k, l) of a diagram is even or odd according to k + l (1-based).
enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct Cell {
    int row; // k >= 1
    int col; // l >= 1

    auto operator<=>(const Cell&) const = default;
};

inline Parity parity_of(Cell c) { return (c.row + c.col) % 2 == 0 ? Parity::even : Parity::odd; }

namespace detail {

// Cells of the given parity in a line (row or column) of `len` boxes whose
// index is `index`: ceil(len/2) when the first box has that parity, else floor.
inline int parity_count(int index, int len, Parity parity)
{
    bool first_even = (index + 1) % 2 == 0;
    bool first_matches = first_even == (parity == Parity::even);
    return first_matches ? (len + 1) / 2 : len / 2;
}

} // namespace detail

struct ParityProfile {
    std::vector<int> row_even;
    std::vector<int> row_odd;
    std::vector<int> col_even;
    std::vector<int> col_odd;
};

/// Row-wise (p^ev, p^odd) and column-wise (q^ev, q^odd) parity counts.
inline ParityProfile parity_profile(const Partition& p)
{
    ParityProfile prof;
    auto q = transpose(p);
    for (std::size_t i = 0; i < p.length(); ++i) {
        int k = static_cast<int>(i) + 1;
        prof.row_even.push_back(detail::parity_count(k, p[i], Parity::even));
        prof.row_odd.push_back(detail::parity_count(k, p[i], Parity::odd));
    }
    for (std::size_t j = 0; j < q.length(); ++j) {
        int l = static_cast<int>(j) + 1;
        prof.col_even.push_back(detail::parity_count(l, q[j], Parity::even));
        prof.col_odd.push_back(detail::parity_count(l, q[j], Parity::odd));
    }
    return prof;
}

/// The cells of one parity inside a diagram. Two hollow shapes are equal when
/// they have the same parity and the same cell set.
class HollowShape {
public:
    HollowShape() = default;
    HollowShape(Parity parity, std::set<Cell> cells) : parity_(parity), cells_(std::move(cells)) {}

    Parity parity() const { return parity_; }
    const std::set<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    /// Last column holding a cell in row k, or 0.
    int last_col(int k) const
    {
        auto it = cells_.lower_bound(Cell{k + 1, 0});
        if (it == cells_.begin())
            return 0;
        --it;
        return it->row == k ? it->col : 0;
    }

    bool operator==(const HollowShape&) const = default;

private:
    Parity parity_ = Parity::odd;
    std::set<Cell> cells_;
};

inline HollowShape hollow(const Partition& p, Parity parity)
{
    std::set<Cell> cells;
    for (std::size_t i = 0; i < p.length(); ++i) {
        int k = static_cast<int>(i) + 1;
        for (int l = 1; l <= p[i]; ++l)
            if (parity_of({k, l}) == parity)
                cells.insert({k, l});
    }
    return HollowShape(parity, std::move(cells));
}

/// Shape statistics: F_a = Σ_j c_j(c_j-1)/2 over column lengths,
/// F_b = Σ_i (i-1) p_i^odd, F_d = Σ_i (i-1) p_i^ev.
enum class Statistic { a, b, d };

inline const char* to_string(Statistic s) { return s == Statistic::a ? "F_a" : s == Statistic::b ? "F_b" : "F_d"; }

inline std::int64_t f_stat(const Partition& p, Statistic kind)
{
    std::int64_t total = 0;
    for (std::size_t i = 0; i < p.length(); ++i) {
        int k = static_cast<int>(i) + 1;
        int weight = kind == Statistic::a   ? p[i]
                     : kind == Statistic::b ? detail::parity_count(k, p[i], Parity::odd)
                                            : detail::parity_count(k, p[i], Parity::even);
        total += static_cast<std::int64_t>(i) * weight;
    }
    return total;
}

/// Statistic of the shape of P(seq).
template <typename T>
std::int64_t f_stat(std::span<const T> seq, Statistic kind)
{
    return f_stat(rs_shape(seq), kind);
}

template <typename T>
std::int64_t f_stat(const std::vector<T>& seq, Statistic kind)
{
    return f_stat(std::span<const T>(seq), kind);
}

/// Column forms: F_b = Σ_{odd j} (q_j^odd)^2 + Σ_{even j} q_j^odd (q_j^odd - 1) and
/// F_d = Σ_{odd j} q_j^ev (q_j^ev - 1) + Σ_{even j} (q_j^ev)^2.
inline std::int64_t f_stat_by_columns(const Partition& p, Statistic kind)
{
    auto q = transpose(p);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < q.length(); ++j) {
        int l = static_cast<int>(j) + 1;
        bool odd_col = l % 2 == 1;
        std::int64_t c = 0;
        switch (kind) {
        case Statistic::a:
            c = q[j];
            total += c * (c - 1) / 2;
            break;
        case Statistic::b:
            c = detail::parity_count(l, q[j], Parity::odd);
            total += odd_col ? c * c : c * (c - 1);
            break;
        case Statistic::d:
            c = detail::parity_count(l, q[j], Parity::even);
            total += odd_col ? c * (c - 1) : c * c;
            break;
        }
    }
    return total;
}

/// Grid of `E`/`O` characters, one line per row.
inline std::string render_parity(const Partition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        int k = static_cast<int>(i) + 1;
        for (int l = 1; l <= p[i]; ++l)
            out += parity_of({k, l}) == Parity::even ? 'E' : 'O';
        out += '\n';
    }
    return out;
}

/// Like render_parity, with the suppressed parity drawn as `.`.
inline std::string render_hollow(const Partition& p, Parity keep)
{
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        int k = static_cast<int>(i) + 1;
        for (int l = 1; l <= p[i]; ++l) {
            auto par = parity_of({k, l});
            out += par != keep ? '.' : par == Parity::even ? 'E' : 'O';
        }
        out += '\n';
    }
    return out;
}

} // namespace socular
