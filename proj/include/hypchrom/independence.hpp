#pragma once

// Simple graphs and their independence polynomials.

#include <functional>
#include <utility>
#include <vector>

#include "hypchrom/hypergraph.hpp"
#include "hypchrom/multigraph.hpp"
#include "hypchrom/poly.hpp"

namespace hypchrom {

/// Loopless graph without parallel edges on at most 64 vertices, stored as
/// neighbourhood bitmasks.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(unsigned n);
    SimpleGraph(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges);

    /// Throws std::invalid_argument on loops or parallel edges.
    static SimpleGraph from_multigraph(const Multigraph& g);

    unsigned order() const { return static_cast<unsigned>(adj_.size()); }
    std::size_t edge_count() const;
    bool adjacent(unsigned u, unsigned v) const { return adj_[u].contains(v); }
    VertexSet neighbours(unsigned v) const { return adj_[v]; }
    VertexSet closed_neighbourhood(unsigned v) const { return adj_[v] | VertexSet::single(v); }
    unsigned degree(unsigned v) const { return adj_[v].size(); }
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<unsigned, unsigned>> edge_list() const;

    void add_edge(unsigned u, unsigned v);

    Multigraph to_multigraph() const;
    Hypergraph to_hypergraph() const;

    /// G - S, renumbered so survivors keep their relative order.
    SimpleGraph remove(VertexSet s) const;

private:
    std::vector<VertexSet> adj_;
};

/// Chooses the recursion vertex among `alive` (never empty).
using PivotRule = std::function<unsigned(const SimpleGraph&, VertexSet alive)>;

/// Vertex of maximum degree inside the induced subgraph, lowest index on ties.
unsigned max_degree_pivot(const SimpleGraph& g, VertexSet alive);

/// I(G, x) by I(G) = I(G - v) + x I(G - N[v]), memoised on the surviving
/// vertex set.
IntPolynomial independence_poly(const SimpleGraph& g, const PivotRule& pivot = max_degree_pivot);

/// I(G, x) by direct subset enumeration; n <= 25.
IntPolynomial independence_brute(const SimpleGraph& g);

unsigned independence_number(const SimpleGraph& g);
/// No induced K_{1,3}.
bool is_clawfree(const SimpleGraph& g);

}  // namespace hypchrom
