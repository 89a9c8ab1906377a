#include "hypchrom/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypchrom {
namespace {

// Polynomials over Q, used only for gcds and Sturm chains.
struct RatPoly {
    std::vector<Rational> c;

    RatPoly() = default;
    explicit RatPoly(const IntPolynomial& p) {
        c.reserve(p.coeffs().size());
        for (const auto& a : p.coeffs()) c.emplace_back(a);
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.c.size(); ++i) d.c.push_back(p.c[i] * static_cast<unsigned long>(i));
    d.trim();
    return d;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem) {
    if (den.zero()) throw std::domain_error("division by the zero polynomial");
    rem = num;
    quot.c.assign(num.deg() >= den.deg() ? static_cast<std::size_t>(num.deg() - den.deg() + 1) : 0, 0);
    const std::size_t dd = static_cast<std::size_t>(den.deg());
    while (!rem.zero() && rem.deg() >= den.deg()) {
        const std::size_t shift = static_cast<std::size_t>(rem.deg()) - dd;
        Rational f = rem.c.back() / den.c.back();
        quot.c[shift] = f;
        for (std::size_t j = 0; j <= dd; ++j) rem.c[shift + j] -= f * den.c[j];
        rem.c.pop_back();
        rem.trim();
    }
    quot.trim();
}

RatPoly quotient(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r;
    divmod(a, b, q, r);
    return q;
}

RatPoly monic(RatPoly p) {
    if (p.zero()) return p;
    Rational lead = p.c.back();
    for (auto& x : p.c) x /= lead;
    return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.zero()) {
        RatPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

// Scales to a primitive integer polynomial with positive leading coefficient.
IntPolynomial primitive(const RatPoly& p) {
    if (p.zero()) return {};
    Integer l = 1;
    for (const auto& x : p.c) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> v;
    v.reserve(p.c.size());
    Integer g = 0;
    for (const auto& x : p.c) {
        Integer n = x.get_num() * (l / x.get_den());
        g = gcd(g, n);
        v.push_back(std::move(n));
    }
    if (p.c.back() < 0) g = -g;
    for (auto& x : v) x /= g;
    return IntPolynomial(std::move(v));
}

Rational eval(const RatPoly& p, const Rational& x) {
    Rational r = 0;
    for (std::size_t i = p.c.size(); i-- > 0;) r = r * x + p.c[i];
    return r;
}

std::vector<RatPoly> sturm_chain(const IntPolynomial& p) {
    std::vector<RatPoly> chain;
    chain.emplace_back(p);
    chain.push_back(derivative(chain.front()));
    while (!chain.back().zero()) {
        RatPoly q, r;
        divmod(chain[chain.size() - 2], chain.back(), q, r);
        for (auto& x : r.c) x = -x;
        if (r.zero()) break;
        // Positive rescaling keeps every sign in the chain.
        Rational scale = abs(r.c.back());
        for (auto& x : r.c) x /= scale;
        chain.push_back(std::move(r));
    }
    if (chain.back().zero()) chain.pop_back();
    return chain;
}

unsigned variations(const std::vector<RatPoly>& chain, const Rational& x) {
    unsigned v = 0;
    int last = 0;
    for (const auto& s : chain) {
        int sg = sgn(eval(s, x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

struct Isolator {
    Rational eps;
    unsigned multiplicity;
    std::vector<RootInterval>& out;

    void run(const IntPolynomial& g, Rational a, Rational b) {
        if (g.degree() < 1) return;
        const auto chain = sturm_chain(g);
        auto count = [&](const Rational& lo, const Rational& hi) {
            return variations(chain, lo) - variations(chain, hi);
        };
        unsigned k = count(a, b);
        if (k == 0) return;
        if (k == 1) {
            while (b - a > eps) {
                Rational m = (a + b) / 2;
                if (hypchrom::eval(g, m) == 0) {
                    out.push_back({m, m, multiplicity});
                    return;
                }
                if (count(a, m) == 1) {
                    b = m;
                } else {
                    a = m;
                }
            }
            out.push_back({a, b, multiplicity});
            return;
        }
        Rational m = (a + b) / 2;
        if (hypchrom::eval(g, m) == 0) {
            out.push_back({m, m, multiplicity});
            // Deflate by the rational linear factor and continue on the rest.
            RatPoly lin;
            lin.c = {-m, Rational(1)};
            run(primitive(quotient(RatPoly(g), lin)), a, b);
            return;
        }
        run(g, a, m);
        run(g, m, b);
    }
};

}  // namespace

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
    std::vector<IntPolynomial> factors;
    if (p.degree() == 0) return factors;
    RatPoly f(p);
    RatPoly fp = derivative(f);
    RatPoly a0 = gcd(f, fp);
    RatPoly b = quotient(f, a0);
    RatPoly c = quotient(fp, a0);
    RatPoly d = sub(c, derivative(b));
    while (b.deg() > 0) {
        RatPoly a = gcd(b, d);
        factors.push_back(primitive(a));
        b = quotient(b, a);
        c = quotient(d, a);
        d = sub(c, derivative(b));
    }
    return factors;
}

unsigned sturm_count(const IntPolynomial& squarefree, const Rational& a, const Rational& b) {
    if (squarefree.degree() < 1) return 0;
    const auto chain = sturm_chain(squarefree);
    return variations(chain, a) - variations(chain, b);
}

std::vector<RootInterval> sturm_real_roots(const IntPolynomial& p, unsigned precision_bits) {
    if (p.is_zero()) throw std::domain_error("real roots of the zero polynomial");
    std::vector<RootInterval> roots;
    Rational eps(1);
    eps /= Rational(Integer(1) << precision_bits);
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const IntPolynomial& g = factors[i];
        if (g.degree() < 1) continue;
        // Cauchy bound: every root has |r| < 1 + max|a_i| / |a_deg|.
        Integer mx = 0;
        for (int j = 0; j < g.degree(); ++j) mx = std::max<Integer>(mx, abs(g.coeffs()[static_cast<std::size_t>(j)]));
        Rational bound = Rational(1) + Rational(mx, abs(g.leading()));
        bound.canonicalize();
        Isolator iso{eps, static_cast<unsigned>(i + 1), roots};
        iso.run(g, -bound, bound);
    }
    std::sort(roots.begin(), roots.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return roots;
}

}  // namespace hypchrom
