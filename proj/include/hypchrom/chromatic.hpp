#pragma once

// Chromatic polynomials of hypergraphs: P(H, k) counts colourings with k
// colours in which no edge is monochromatic.

#include "hypchrom/hypergraph.hpp"
#include "hypchrom/poly.hpp"

namespace hypchrom {

/// Deletion–contraction P(H) = P(H - e) - P(H/e). Each node short-circuits
/// size-1 edges to zero, applies Sperner reduction, splits components and
/// clean cut vertices, then memoises on a relabelled edge list and pivots
/// on the smallest edge.
IntPolynomial chrom_poly(const Hypergraph& h);

/// Weak proper k-colourings counted by backtracking enumeration; n <= 8.
Integer chrom_count(const Hypergraph& h, unsigned k);

/// Interpolates chrom_count at k = 0..n; n <= 7.
IntPolynomial chrom_interpolate(const Hypergraph& h);

/// Σ over partitions of V into independent blocks of (λ)_{#blocks}; n <= 10.
IntPolynomial chrom_partition(const Hypergraph& h);

/// λ Σ_{w ∈ V0 ∈ I(H)} P(H - V0, λ - 1).
IntPolynomial chrom_level(const Hypergraph& h, unsigned w);

/// Coefficients a_i = Σ_j (-1)^j N(i, j), N(i, j) counting spanning
/// sub-hypergraphs with i components and j edges; at most 20 edges.
IntPolynomial whitney_coeffs(const Hypergraph& h);

/// P(H[V1]) P(H[V2]) / (λ)_p for a split whose overlap V1 ∩ V2 has p
/// vertices, every pair of which is an edge, and where every edge lies in
/// one side. Throws std::invalid_argument("not a clique cut") otherwise.
IntPolynomial clique_cut_factor(const Hypergraph& h, VertexSet side1, VertexSet side2, unsigned p);

}  // namespace hypchrom
