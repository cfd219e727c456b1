#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "socular/error.hpp"
#include "socular/partition.hpp"

namespace socular {

/// Z-diagram of type (a0; b_1, ..., b_{k-1}): one column of a0 vertical
/// dominoes plus, for each b_i, two columns of b_i horizontal dominoes,
/// columns arranged by decreasing height.
struct ZDiagram {
    int a0 = 0;
    std::vector<int> bs;
    std::vector<int> column_heights; // descending
    Partition shape;
};

inline ZDiagram z_diagram(int a0, std::vector<int> bs)
{
    if (a0 < 0)
        throw domain_error("z_diagram: a0 must be non-negative");
    for (int b : bs)
        if (b < 1)
            throw domain_error("z_diagram: every b_i must be positive");
    if (a0 == 0 && bs.empty())
        throw domain_error("z_diagram: empty diagram");

    ZDiagram z;
    z.a0 = a0;
    z.bs = std::move(bs);
    if (a0 > 0)
        z.column_heights.push_back(2 * a0);
    for (int b : z.bs) {
        z.column_heights.push_back(b);
        z.column_heights.push_back(b);
    }
    std::sort(z.column_heights.begin(), z.column_heights.end(), std::greater<>());
    z.shape = transpose(Partition(z.column_heights));
    return z;
}

struct ZStatistics {
    std::int64_t f_b = 0;
    std::int64_t f_d = 0;
};

/// F_b = a0^2 + ½Σ b_i(b_i-1),  F_d = a0^2 - a0 + ½Σ b_i(b_i-1).
inline ZStatistics z_closed_forms(int a0, const std::vector<int>& bs)
{
    z_diagram(a0, bs); // validates
    std::int64_t half = 0;
    for (std::int64_t b : bs)
        half += b * (b - 1) / 2;
    std::int64_t a = a0;
    return {a * a + half, a * a - a + half};
}

} // namespace socular
