#pragma once

// Builders for the hypergraph families studied here, plus random samplers
// used by the property suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypchrom/hypergraph.hpp"
#include "hypchrom/independence.hpp"
#include "hypchrom/multigraph.hpp"

namespace hypchrom {

/// Apex construction: vertex n joins every edge, uv -> {u, v, n}.
Hypergraph h_apex(const SimpleGraph& g);

/// Per-edge construction: edge i gains its own vertex n + i. A loop at u
/// becomes the 2-edge {u, n + i}.
Hypergraph h_edge(const Multigraph& g);

/// Vertices w = 0, x_1..x_s = 1..s, y_1..y_t = s+1..s+t; edges {y_1..y_t}
/// followed by {w, x_1..x_s, y_j} for each j.
Hypergraph family_st(unsigned s, unsigned t);

/// Adds `extra` new vertices n..n+extra-1 and replaces each edge listed in
/// `extended` by e ∪ S_e, where `assignment[k]` is S_e for `extended[k]` given
/// as offsets 0..extra-1. Every listed edge must contain w and the offsets
/// must cover all new vertices.
Hypergraph attach(const Hypergraph& base, unsigned w, const std::vector<std::size_t>& extended,
                  unsigned extra, const std::vector<VertexSet>& assignment);

/// K_p as a hypergraph: all 2-subsets of p vertices.
Hypergraph complete_hypergraph(unsigned p);
/// A connected, non-Sperner hypergraph whose bridges form a proper connected
/// spanning subset: ({0,1,2,3}, {{0,1,2},{0,1,3},{0,1}}).
Hypergraph theorem3_instance();
/// h_edge of the double edge: ({0,1,2,3}, {{0,1,2},{0,1,3}}).
Hypergraph figure1b();

Multigraph double_edge();
Multigraph cycle_multigraph(unsigned n);

SimpleGraph complete_graph(unsigned n);
SimpleGraph path_graph(unsigned n);
SimpleGraph cycle_graph(unsigned n);
SimpleGraph star_graph(unsigned leaves);

/// Multigraph viewed as a hypergraph: {u, v} per edge, {u} per loop.
Hypergraph as_hypergraph(const Multigraph& g);

using Rng = std::mt19937_64;

/// n uniform in [min_n, max_n], m uniform in [min_m, max_m], each edge a
/// uniform subset of size in [min_size, max_size] (clamped to n).
struct HypergraphSampler {
    unsigned min_n = 3, max_n = 6;
    unsigned min_m = 2, max_m = 7;
    unsigned min_size = 2, max_size = 4;
    bool connected = true;

    Hypergraph operator()(Rng& rng) const;
};

/// G(n, 1/2) style graph: each pair independently with probability p.
SimpleGraph random_simple_graph(Rng& rng, unsigned n, double p = 0.5);

/// m edges with endpoints uniform over ordered pairs (loops allowed).
Multigraph random_multigraph(Rng& rng, unsigned n, unsigned m);

/// Connected Sperner hypergraph with at least two edges that is separable at
/// vertex 0, built from two random sides plus edges through vertex 0.
Hypergraph random_separable_sperner(Rng& rng, unsigned min_n = 4, unsigned max_n = 7);

}  // namespace hypchrom
