#pragma once

// Real-root isolation by Sturm sequences over exact rationals.

#include <vector>

#include "hypchrom/poly.hpp"

namespace hypchrom {

/// A closed interval [lo, hi] containing exactly one distinct real root.
/// lo == hi when the root was hit exactly during bisection.
struct RootInterval {
    Rational lo;
    Rational hi;
    unsigned multiplicity = 1;

    bool is_exact() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

inline constexpr unsigned kDefaultPrecisionBits = 32;

/// Square-free decomposition p = c · Π f_i^i (Yun). Entry i-1 holds f_i as a
/// primitive integer polynomial (possibly constant 1 when absent).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

/// Isolating intervals for every distinct real root of p, sorted ascending,
/// each of width <= 2^-precision_bits and tagged with its multiplicity.
std::vector<RootInterval> sturm_real_roots(const IntPolynomial& p,
                                           unsigned precision_bits = kDefaultPrecisionBits);

/// Number of distinct real roots of a square-free p in the half-open (a, b].
unsigned sturm_count(const IntPolynomial& squarefree, const Rational& a, const Rational& b);

}  // namespace hypchrom
