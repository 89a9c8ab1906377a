#pragma once

// Sparse Laurent polynomials in one and two variables.

#include <map>
#include <string>
#include <utility>

#include "hypchrom/poly.hpp"

namespace hypchrom {

/// Sparse polynomial in λ admitting negative powers. No stored zeros.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const IntPolynomial& p);

    static LaurentPolynomial monomial(const Integer& c, long power);

    const std::map<long, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long min_power() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    /// Converts to an ordinary polynomial; throws std::domain_error when a
    /// negative power remains.
    IntPolynomial to_polynomial() const;

private:
    void add_term(long power, const Integer& c);
    std::map<long, Integer> terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned k);

/// Sparse polynomial in (x, y) admitting negative exponents. Keys are
/// (i, j) for x^i y^j; no stored zeros.
class BivarLaurent {
public:
    using Exponents = std::pair<long, long>;

    BivarLaurent() = default;
    static BivarLaurent constant(const Integer& c);
    static BivarLaurent monomial(const Integer& c, long i, long j);
    static BivarLaurent x() { return monomial(1, 1, 0); }
    static BivarLaurent y() { return monomial(1, 0, 1); }

    const std::map<Exponents, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// All exponents non-negative.
    bool is_ordinary() const;
    Integer coeff(long i, long j) const;

    BivarLaurent& operator+=(const BivarLaurent& rhs);
    BivarLaurent& operator-=(const BivarLaurent& rhs);
    BivarLaurent& operator*=(const BivarLaurent& rhs);
    friend BivarLaurent operator+(BivarLaurent a, const BivarLaurent& b) { return a += b; }
    friend BivarLaurent operator-(BivarLaurent a, const BivarLaurent& b) { return a -= b; }
    friend BivarLaurent operator*(BivarLaurent a, const BivarLaurent& b) { return a *= b; }
    friend bool operator==(const BivarLaurent&, const BivarLaurent&) = default;

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Integer& c);
    std::map<Exponents, Integer> terms_;
};

/// Exact evaluation. Throws std::domain_error when a negative exponent
/// meets a zero argument.
Rational eval(const BivarLaurent& t, const Rational& x, const Rational& y);

/// sign · λ^monomial_shift · T(x_sub(λ), y_sub(λ)) as an ordinary polynomial.
/// Throws std::domain_error("specialization not polynomial") if negative
/// powers of λ survive.
IntPolynomial bivar_specialize(const BivarLaurent& t, const LaurentPolynomial& x_sub,
                               const LaurentPolynomial& y_sub, long monomial_shift, int sign);

/// `t <i> <j> <coeff>` lines in lexicographic (i, j) order.
std::string format_bivar(const BivarLaurent& t);
BivarLaurent parse_bivar(const std::string& text);

}  // namespace hypchrom
