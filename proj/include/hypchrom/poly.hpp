#pragma once

// Exact univariate polynomials with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypchrom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial in one variable (written λ). Index i of coeffs() holds
/// the coefficient of λ^i; the highest stored coefficient is never zero, so
/// the zero polynomial has an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const Integer& c);
    static IntPolynomial monomial(const Integer& c, std::size_t power);
    /// λ - c
    static IntPolynomial linear(const Integer& c);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;

    IntPolynomial derivative() const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const Integer& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
    friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }
    IntPolynomial operator-() const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form, e.g. "x^4 - 2x^2 + x".
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned k);

/// (λ)_k = λ(λ-1)...(λ-k+1); (λ)_0 = 1.
IntPolynomial falling_factorial(unsigned k);

/// p(λ + c). shift(p, -1) realises the substitution λ -> λ-1.
IntPolynomial shift(const IntPolynomial& p, const Integer& c);

/// Horner evaluation at an exact rational point.
Rational eval(const IntPolynomial& p, const Rational& at);
Integer eval_integer(const IntPolynomial& p, const Integer& at);

/// Divides p by (λ - c). Returns the quotient; `remainder` receives p(c).
IntPolynomial synthetic_divide(const IntPolynomial& p, const Integer& c, Integer& remainder);

/// Largest k with (λ - c)^k | p. Throws std::domain_error on the zero polynomial.
unsigned root_multiplicity(const IntPolynomial& p, const Integer& c);

/// (λ - c)^k | p, treating the zero polynomial as divisible by everything.
bool divisible_by_power(const IntPolynomial& p, const Integer& c, unsigned k);

/// num / den over the integers; throws std::logic_error when the division
/// leaves a remainder or a non-integral quotient coefficient.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

/// λ Σ_k a_k (λ-1)^{n-k}: the polynomial form of λ(λ-1)^n I(G, 1/(λ-1))
/// given the coefficients a_0..a_d of I(G, x). Requires d <= n.
IntPolynomial apex_transform(std::span<const Integer> indep_coeffs, unsigned n);

/// Text form `poly <deg> c0 c1 ... cdeg`; the zero polynomial is `poly -1`.
std::string format_poly(const IntPolynomial& p);
/// Throws ParseError on malformed text.
IntPolynomial parse_poly(std::string_view text);

bool is_integral(const Rational& q);

}  // namespace hypchrom
