#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "socular/partition.hpp"
#include "socular/rational.hpp"

namespace socular {

/// Young tableau over a totally ordered entry type: rows weakly increase,
/// columns strictly increase, row lengths weakly decrease.
template <typename T>
class BasicTableau {
public:
    using value_type = T;
    using Row = std::vector<T>;

    BasicTableau() = default;
    explicit BasicTableau(std::vector<Row> rows) : rows_(std::move(rows)) {}

    const std::vector<Row>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    std::size_t cell_count() const
    {
        std::size_t n = 0;
        for (const auto& r : rows_)
            n += r.size();
        return n;
    }

    /// Row insertion: v replaces the leftmost entry strictly bigger than it
    /// (or is appended), and the bumped entry moves on to the next row.
    void insert(T v)
    {
        for (auto& row : rows_) {
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(std::move(v));
                return;
            }
            std::swap(*it, v);
        }
        rows_.push_back(Row{std::move(v)});
    }

    bool is_valid() const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& row = rows_[i];
            if (row.empty() || !std::is_sorted(row.begin(), row.end()))
                return false;
            if (i == 0)
                continue;
            const auto& above = rows_[i - 1];
            if (row.size() > above.size())
                return false;
            for (std::size_t j = 0; j < row.size(); ++j)
                if (!(above[j] < row[j]))
                    return false;
        }
        return true;
    }

    bool operator==(const BasicTableau&) const = default;

private:
    std::vector<Row> rows_;
};

using YoungTableau = BasicTableau<Rational>;

template <typename T>
BasicTableau<T> rs_insert(BasicTableau<T> t, T v)
{
    t.insert(std::move(v));
    return t;
}

/// P(x): left-to-right insertion starting from the empty tableau.
template <typename T>
BasicTableau<T> rs_tableau(std::span<const T> seq)
{
    BasicTableau<T> t;
    for (const auto& v : seq)
        t.insert(v);
    return t;
}

template <typename T>
BasicTableau<T> rs_tableau(const std::vector<T>& seq)
{
    return rs_tableau(std::span<const T>(seq));
}

template <typename T>
Partition shape(const BasicTableau<T>& t)
{
    std::vector<int> parts;
    for (const auto& r : t.rows())
        parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

/// Shape of P(x) without keeping the tableau around.
template <typename T>
Partition rs_shape(std::span<const T> seq)
{
    return shape(rs_tableau(seq));
}

template <typename T>
Partition rs_shape(const std::vector<T>& seq)
{
    return rs_shape(std::span<const T>(seq));
}

/// One row per line, entries separated by spaces, top row first.
inline std::string render(const YoungTableau& t)
{
    std::string out;
    for (const auto& row : t.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += ' ';
            out += to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

} // namespace socular
