#pragma once

// Tutte polynomials of multigraphs.

#include "hypchrom/bivar.hpp"
#include "hypchrom/multigraph.hpp"

namespace hypchrom {

inline constexpr std::size_t kSubsetExpansionMaxEdges = 20;

/// T_G(x, y) = Σ_{A ⊆ E} (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}; at most 20 edges.
BivarLaurent tutte_subset(const Multigraph& g);

/// Deletion–contraction: loops first (factor y), then bridges (factor x),
/// otherwise the lowest-index edge splits into T(G-e) + T(G/e).
BivarLaurent tutte_dc(const Multigraph& g);

/// Exact point evaluation.
Rational tutte_eval(const BivarLaurent& t, const Rational& x, const Rational& y);

}  // namespace hypchrom
