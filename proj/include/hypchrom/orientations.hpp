#pragma once

// Exhaustive orientation counting for multigraphs.

#include <cstdint>

#include "hypchrom/multigraph.hpp"
#include "hypchrom/poly.hpp"

namespace hypchrom {

inline constexpr std::size_t kOrientationMaxEdges = 20;

/// One direction bit per edge: clear means u -> v, set means v -> u. A loop
/// has two orientations, both closing a directed cycle.
struct Orientation {
    std::uint64_t bits = 0;
    bool reversed(std::size_t i) const { return ((bits >> i) & 1U) != 0; }
};

/// No directed cycle; any loop is a directed cycle.
bool is_acyclic(const Multigraph& g, Orientation o);
/// Every arc lies on a directed cycle, i.e. its ends are strongly connected.
bool is_totally_cyclic(const Multigraph& g, Orientation o);

Integer count_acyclic(const Multigraph& g);
Integer count_totally_cyclic(const Multigraph& g);

}  // namespace hypchrom
