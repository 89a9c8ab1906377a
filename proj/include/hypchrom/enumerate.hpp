#pragma once

// Exhaustive generation of small labeled graphs.

#include <functional>

#include "hypchrom/independence.hpp"
#include "hypchrom/multigraph.hpp"

namespace hypchrom {

/// Calls fn on each of the 2^(n(n-1)/2) labeled simple graphs on n vertices.
void for_each_simple_graph(unsigned n, const std::function<void(const SimpleGraph&)>& fn);

enum class EdgeOrder {
    sequence,  // every ordered m-tuple of endpoint pairs
    multiset,  // one representative per multiset of endpoint pairs
};

/// Multigraphs on n vertices with exactly m edges, loops included. Endpoint
/// pairs are unordered (u <= v).
void for_each_multigraph(unsigned n, unsigned m, EdgeOrder order, const std::function<void(const Multigraph&)>& fn);

}  // namespace hypchrom
