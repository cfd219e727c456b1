#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socular/parabolic.hpp"
#include "socular/partition.hpp"
#include "socular/zdiagram.hpp"

namespace socular {

struct RichardsonResult {
    Partition partition;
    bool very_even = false;
    /// Very even type-D partitions label two orbits (I and II); which one is
    /// Richardson is not decided here.
    std::optional<std::string> numeral;

    bool operator==(const RichardsonResult&) const = default;
};

/// Partition of the Richardson orbit of the parabolic.
inline RichardsonResult richardson_partition(const ParabolicSetup& s)
{
    RichardsonResult r;
    switch (s.g.family) {
    case Family::A:
        r.partition = transpose(Partition::from_unsorted(s.composition));
        return r;
    case Family::B: {
        auto parts = z_diagram_of(s).shape.vec();
        auto idx = static_cast<std::size_t>(2 * s.tail()); // part p_{2n_k+1}, 0-based
        if (idx < parts.size())
            parts[idx] += 1;
        else
            parts.push_back(1);
        r.partition = collapse(Partition::from_unsorted(std::move(parts)), OrbitFamily::B);
        return r;
    }
    case Family::C:
        r.partition = collapse(z_diagram_of(s).shape, OrbitFamily::C);
        return r;
    case Family::D:
        r.partition = collapse(z_diagram_of(s).shape, OrbitFamily::D);
        r.very_even = std::ranges::all_of(r.partition, [](int v) { return v % 2 == 0; });
        if (r.very_even)
            r.numeral = "undetermined";
        return r;
    }
    throw integrity_error("richardson_partition: unknown family");
}

} // namespace socular
