#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "socular/error.hpp"
#include "socular/hollow.hpp"
#include "socular/partition.hpp"

namespace socular {

/// True iff the diagram tiles by dominoes (empty 2-core), which happens
/// exactly when it has as many even cells as odd ones.
inline bool is_domino_type(const Partition& p)
{
    auto prof = parity_profile(p);
    int even = 0;
    int odd = 0;
    for (std::size_t i = 0; i < p.length(); ++i) {
        even += prof.row_even[i];
        odd += prof.row_odd[i];
    }
    return even == odd;
}

/// Per-row state of the H-algorithm.
struct RowMarking {
    int last_kept = 0;           ///< last column of the kept parity (0 if none)
    std::optional<int> label;    ///< unset for rows in a blocked pair
    bool extended = false;       ///< a terminal cell was appended after last_kept
    int marked_end() const { return extended ? last_kept + 1 : last_kept; }
};

struct HTrace {
    OrbitFamily family = OrbitFamily::B;
    Parity kept = Parity::odd;
    std::vector<RowMarking> rows;
    std::vector<int> filled;   ///< row lengths after filling the holes
    bool appended_row = false; ///< a final part 1 was added to reach the target total
    Partition result;
};

/// Runs the H-algorithm of the given type on a domino-type partition of 2n
/// and records every step. The result is a special partition of type `fam`
/// with the same odd (B, C) or even (D) boxes as `p`, of total 2n+1 for B
/// and 2n for C and D.
inline HTrace h_algorithm_trace(const Partition& p, OrbitFamily fam)
{
    if (!is_domino_type(p))
        throw domain_error("h_algorithm: " + to_string(p) + " is not of domino type");

    HTrace tr;
    tr.family = fam;
    tr.kept = fam == OrbitFamily::D ? Parity::even : Parity::odd;
    const auto kept = hollow(p, tr.kept);
    const std::size_t rows = p.length();

    tr.rows.resize(rows);
    for (std::size_t i = 0; i < rows; ++i)
        tr.rows[i].last_kept = kept.last_col(static_cast<int>(i) + 1);

    // Rows i, i+1 whose kept cells end in the staircase pattern
    //   X
    //    X
    // stay unlabeled. Type C also blocks the pattern starting from an empty
    // row (E over O in the first column of P).
    int label = 0;
    for (std::size_t i = 0; i < rows;) {
        const int here = tr.rows[i].last_kept;
        const bool blocked = i + 1 < rows && tr.rows[i + 1].last_kept == here + 1 &&
                             (here >= 1 || fam == OrbitFamily::C);
        if (blocked) {
            i += 2;
            continue;
        }
        tr.rows[i].label = ++label;
        ++i;
    }

    // B extends odd-labeled rows, C and D extend even-labeled rows.
    for (auto& r : tr.rows) {
        if (!r.label)
            continue;
        bool odd_label = *r.label % 2 == 1;
        r.extended = fam == OrbitFamily::B ? odd_label : !odd_label;
    }

    // Filling the holes takes the smallest Young diagram containing every mark.
    tr.filled.assign(rows, 0);
    int reach = 0;
    for (std::size_t i = rows; i-- > 0;) {
        reach = std::max(reach, tr.rows[i].marked_end());
        tr.filled[i] = reach;
    }
    std::vector<int> parts;
    for (int len : tr.filled)
        if (len > 0)
            parts.push_back(len);

    const int n2 = p.total();
    int sum = 0;
    for (int v : parts)
        sum += v;
    if (fam == OrbitFamily::B && sum == n2) {
        parts.push_back(1);
        tr.appended_row = true;
    } else if (fam == OrbitFamily::D && sum == n2 - 1) {
        parts.push_back(1);
        tr.appended_row = true;
    }

    const int target = fam == OrbitFamily::B ? n2 + 1 : n2;
    int final_sum = sum + (tr.appended_row ? 1 : 0);
    if (final_sum != target)
        throw integrity_error("h_algorithm: reconstructed total " + std::to_string(final_sum) +
                              " differs from target " + std::to_string(target));
    try {
        tr.result = Partition(std::move(parts));
    } catch (const domain_error&) {
        throw integrity_error("h_algorithm: reconstruction is not weakly decreasing");
    }
    return tr;
}

inline Partition h_algorithm(const Partition& p, OrbitFamily fam)
{
    return h_algorithm_trace(p, fam).result;
}

} // namespace socular
