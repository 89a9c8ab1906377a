#include "hypchrom/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "hypchrom/parse_error.hpp"
#include "text_lines.hpp"

namespace hypchrom {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) {
    return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t power) {
    std::vector<Integer> v(power + 1);
    v[power] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const Integer& c) {
    return IntPolynomial(std::vector<Integer>{-c, Integer(1)});
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

IntPolynomial pow(const IntPolynomial& p, unsigned k) {
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial base = p;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

IntPolynomial falling_factorial(unsigned k) {
    IntPolynomial r = IntPolynomial::constant(1);
    for (unsigned i = 0; i < k; ++i) r *= IntPolynomial::linear(Integer(i));
    return r;
}

IntPolynomial shift(const IntPolynomial& p, const Integer& c) {
    // Horner in the ring: r <- r * (λ + c) + a_i.
    IntPolynomial step = IntPolynomial::linear(-c);
    IntPolynomial r;
    for (int i = p.degree(); i >= 0; --i) {
        r *= step;
        r += IntPolynomial::constant(p.coeffs()[static_cast<std::size_t>(i)]);
    }
    return r;
}

Rational eval(const IntPolynomial& p, const Rational& at) {
    Rational r = 0;
    for (int i = p.degree(); i >= 0; --i) {
        r = r * at + Rational(p.coeffs()[static_cast<std::size_t>(i)]);
    }
    r.canonicalize();
    return r;
}

Integer eval_integer(const IntPolynomial& p, const Integer& at) {
    Integer r = 0;
    for (int i = p.degree(); i >= 0; --i) r = r * at + p.coeffs()[static_cast<std::size_t>(i)];
    return r;
}

IntPolynomial synthetic_divide(const IntPolynomial& p, const Integer& c, Integer& remainder) {
    if (p.is_zero()) {
        remainder = 0;
        return {};
    }
    const auto& a = p.coeffs();
    std::vector<Integer> q(a.size() - 1);
    Integer carry = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        carry = carry * c + a[i];
        if (i > 0) q[i - 1] = carry;
    }
    remainder = carry;
    return IntPolynomial(std::move(q));
}

unsigned root_multiplicity(const IntPolynomial& p, const Integer& c) {
    if (p.is_zero()) throw std::domain_error("undefined multiplicity");
    unsigned k = 0;
    IntPolynomial cur = p;
    for (;;) {
        Integer rem;
        IntPolynomial q = synthetic_divide(cur, c, rem);
        if (rem != 0) return k;
        ++k;
        cur = std::move(q);
    }
}

bool divisible_by_power(const IntPolynomial& p, const Integer& c, unsigned k) {
    if (p.is_zero()) return true;
    return root_multiplicity(p, c) >= k;
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<Integer> rem = num.coeffs();
    const auto& d = den.coeffs();
    const std::size_t dd = d.size() - 1;
    std::vector<Integer> q(rem.size() - dd);
    for (std::size_t i = q.size(); i-- > 0;) {
        const Integer& top = rem[i + dd];
        if (top % d[dd] != 0) throw std::logic_error("inexact polynomial division");
        Integer f = top / d[dd];
        q[i] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= f * d[j];
    }
    for (const auto& r : rem) {
        if (r != 0) throw std::logic_error("inexact polynomial division");
    }
    return IntPolynomial(std::move(q));
}

IntPolynomial apex_transform(std::span<const Integer> indep_coeffs, unsigned n) {
    std::size_t d = indep_coeffs.size();
    while (d > 0 && indep_coeffs[d - 1] == 0) --d;
    if (d > 0 && d - 1 > n) throw std::invalid_argument("independence degree exceeds order");
    const IntPolynomial lam_minus_1 = IntPolynomial::linear(1);
    IntPolynomial sum;
    for (std::size_t k = 0; k < d; ++k) {
        if (indep_coeffs[k] == 0) continue;
        sum += pow(lam_minus_1, n - static_cast<unsigned>(k)) * indep_coeffs[k];
    }
    return sum * IntPolynomial::monomial(1, 1);
}

std::string format_poly(const IntPolynomial& p) {
    std::ostringstream os;
    os << "poly " << p.degree();
    for (const auto& c : p.coeffs()) os << ' ' << c.get_str();
    return os.str();
}

IntPolynomial parse_poly(std::string_view text) {
    const auto lines = detail::scan_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "expected `poly <deg> c0 ... cdeg`");
    const detail::Line& line = lines.front();
    const auto& toks = line.tokens;
    if (toks[0].text != "poly") throw ParseError(line.number, toks[0].column, "expected `poly`");
    if (toks.size() < 2) throw ParseError(line.number, toks[0].column, "missing degree");
    long deg = 0;
    try {
        std::size_t used = 0;
        deg = std::stol(toks[1].text, &used);
        if (used != toks[1].text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError(line.number, toks[1].column, "bad degree `" + toks[1].text + "`");
    }
    if (deg < -1) throw ParseError(line.number, toks[1].column, "degree below -1");
    if (static_cast<long>(toks.size()) != deg + 3) {
        const std::size_t col = toks.back().column + toks.back().text.size();
        throw ParseError(line.number, col, "expected " + std::to_string(deg + 1) + " coefficients");
    }
    if (lines.size() > 1) throw ParseError(lines[1].number, 1, "trailing input after polynomial");
    std::vector<Integer> coeffs;
    for (std::size_t i = 2; i < toks.size(); ++i) {
        Integer c;
        if (c.set_str(toks[i].text, 10) != 0) throw ParseError(line.number, toks[i].column, "bad coefficient `" + toks[i].text + "`");
        coeffs.push_back(std::move(c));
    }
    if (deg >= 0 && coeffs.back() == 0) throw ParseError(line.number, toks.back().column, "leading coefficient is zero");
    return IntPolynomial(std::move(coeffs));
}

bool is_integral(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_den() == 1;
}

}  // namespace hypchrom
