#include "hypchrom/bivar.hpp"

#include <sstream>
#include <stdexcept>

namespace hypchrom {

LaurentPolynomial::LaurentPolynomial(const IntPolynomial& p) {
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) add_term(static_cast<long>(i), p.coeffs()[i]);
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, long power) {
    LaurentPolynomial r;
    r.add_term(power, c);
    return r;
}

void LaurentPolynomial::add_term(long power, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long LaurentPolynomial::min_power() const {
    return terms_.empty() ? 0 : terms_.begin()->first;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
    LaurentPolynomial out;
    for (const auto& [p, c] : terms_) {
        for (const auto& [q, d] : rhs.terms_) out.add_term(p + q, c * d);
    }
    *this = std::move(out);
    return *this;
}

IntPolynomial LaurentPolynomial::to_polynomial() const {
    if (terms_.empty()) return {};
    if (min_power() < 0) throw std::domain_error("specialization not polynomial");
    std::vector<Integer> v(static_cast<std::size_t>(terms_.rbegin()->first) + 1);
    for (const auto& [p, c] : terms_) v[static_cast<std::size_t>(p)] = c;
    return IntPolynomial(std::move(v));
}

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned k) {
    LaurentPolynomial r = LaurentPolynomial::monomial(1, 0);
    LaurentPolynomial base = p;
    while (k > 0) {
        if (k & 1U) r *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return r;
}

BivarLaurent BivarLaurent::constant(const Integer& c) {
    return monomial(c, 0, 0);
}

BivarLaurent BivarLaurent::monomial(const Integer& c, long i, long j) {
    BivarLaurent r;
    r.add_term({i, j}, c);
    return r;
}

void BivarLaurent::add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool BivarLaurent::is_ordinary() const {
    for (const auto& [e, c] : terms_) {
        if (e.first < 0 || e.second < 0) return false;
    }
    return true;
}

Integer BivarLaurent::coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Integer(0) : it->second;
}

BivarLaurent& BivarLaurent::operator+=(const BivarLaurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BivarLaurent& BivarLaurent::operator-=(const BivarLaurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

BivarLaurent& BivarLaurent::operator*=(const BivarLaurent& rhs) {
    BivarLaurent out;
    for (const auto& [e, c] : terms_) {
        for (const auto& [f, d] : rhs.terms_) out.add_term({e.first + f.first, e.second + f.second}, c * d);
    }
    *this = std::move(out);
    return *this;
}

std::string BivarLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = e.first == 0 && e.second == 0;
        if (mag != 1 || unit) os << mag.get_str();
        if (e.first != 0) os << "x" << (e.first != 1 ? "^" + std::to_string(e.first) : "");
        if (e.second != 0) os << "y" << (e.second != 1 ? "^" + std::to_string(e.second) : "");
    }
    return os.str();
}

namespace {

Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("negative power of zero in evaluation");
        Rational inv = 1 / base;
        return rational_pow(inv, -e);
    }
    Rational r = 1;
    for (long k = 0; k < e; ++k) r *= base;
    return r;
}

}  // namespace

Rational eval(const BivarLaurent& t, const Rational& x, const Rational& y) {
    Rational sum = 0;
    for (const auto& [e, c] : t.terms()) sum += Rational(c) * rational_pow(x, e.first) * rational_pow(y, e.second);
    sum.canonicalize();
    return sum;
}

IntPolynomial bivar_specialize(const BivarLaurent& t, const LaurentPolynomial& x_sub,
                               const LaurentPolynomial& y_sub, long monomial_shift, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (!t.is_ordinary()) throw std::invalid_argument("substitution requires non-negative exponents");
    LaurentPolynomial sum;
    // Cache powers; Tutte polynomials reuse small exponents heavily.
    std::map<long, LaurentPolynomial> xp, yp;
    auto power_of = [](std::map<long, LaurentPolynomial>& cache, const LaurentPolynomial& base, long e)
        -> const LaurentPolynomial& {
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, pow(base, static_cast<unsigned>(e))).first;
        return it->second;
    };
    for (const auto& [e, c] : t.terms()) {
        sum += LaurentPolynomial::monomial(c, 0) * power_of(xp, x_sub, e.first) * power_of(yp, y_sub, e.second);
    }
    sum *= LaurentPolynomial::monomial(sign, monomial_shift);
    return sum.to_polynomial();
}

std::string format_bivar(const BivarLaurent& t) {
    std::ostringstream os;
    for (const auto& [e, c] : t.terms()) os << "t " << e.first << ' ' << e.second << ' ' << c.get_str() << '\n';
    return os.str();
}

BivarLaurent parse_bivar(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    BivarLaurent out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag, coeff;
        long i = 0, j = 0;
        if (!(ls >> tag >> i >> j >> coeff) || tag != "t") throw std::invalid_argument("bad term line `" + line + "`");
        Integer c;
        if (c.set_str(coeff, 10) != 0) throw std::invalid_argument("bad coefficient `" + coeff + "`");
        out += BivarLaurent::monomial(c, i, j);
    }
    return out;
}

}  // namespace hypchrom
