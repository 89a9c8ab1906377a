#include "hypchrom/analysis.hpp"

#include <sstream>
#include <stdexcept>

#include "hypchrom/bivar.hpp"
#include "hypchrom/chromatic.hpp"
#include "hypchrom/constructions.hpp"
#include "hypchrom/orientations.hpp"
#include "hypchrom/tutte.hpp"

namespace hypchrom {
namespace {

const IntPolynomial kLambda = IntPolynomial::monomial(1, 1);
const IntPolynomial kLambdaMinus1 = IntPolynomial::linear(1);

CheckResult poly_equality(std::string id, const std::string& subject, const IntPolynomial& lhs,
                          const IntPolynomial& rhs) {
    CheckResult c{std::move(id), lhs == rhs, subject};
    if (c.ok) {
        c.detail += " P=[" + format_poly(lhs) + "]";
    } else {
        c.detail += " lhs=[" + format_poly(lhs) + "] rhs=[" + format_poly(rhs) + "]";
    }
    return c;
}

bool has_lambda_minus1_sq(const Hypergraph& h) {
    return divisible_by_power(chrom_poly(h), Integer(1), 2);
}

bool predict_with_separation(const Hypergraph& h, const Separation& s, std::string& rule);

// Prediction for a hypergraph reached through identification. The structural
// criterion is used whenever its hypotheses hold after Sperner reduction;
// otherwise the polynomial of the (smaller) hypergraph is consulted.
bool predict_factor(const Hypergraph& h, std::string& rule) {
    const Hypergraph r = sperner_reduce(h);
    const bool usable = r.size() >= 2 && r.min_edge_size() >= 2 && is_connected(r);
    if (usable) {
        const VertexSet f = common_vertices(r);
        if (!f.empty()) {
            rule += "/common-vertices";
            return f.size() == 1;
        }
        for (unsigned w = 0; w < r.order(); ++w) {
            const auto seps = separations(r, w);
            if (!seps.empty()) return predict_with_separation(r, seps.front(), rule);
        }
    }
    rule += "/direct";
    return has_lambda_minus1_sq(h);
}

bool predict_with_separation(const Hypergraph& h, const Separation& s, std::string& rule) {
    const bool i1 = is_independent(h, s.side1);
    const bool i2 = is_independent(h, s.side2);
    if (!i1 && !i2) {
        rule += "/both-sides-dependent";
        return true;
    }
    if (i1 && i2) throw std::logic_error("both separation sides independent with F(H) empty");
    rule += "/one-side-independent";
    return predict_factor(identify(h, i1 ? s.side1 : s.side2), rule);
}

}  // namespace

std::string describe(const SimpleGraph& g) {
    std::ostringstream os;
    os << "G=" << g.order() << ':';
    bool first = true;
    for (const auto& [u, v] : g.edge_list()) {
        os << (first ? "" : ",") << u << '-' << v;
        first = false;
    }
    return os.str();
}

std::string describe(const Multigraph& g) {
    std::ostringstream os;
    os << "G=" << g.order() << ':';
    bool first = true;
    for (const auto& e : g.edges()) {
        os << (first ? "" : ",") << e.u << '-' << e.v;
        first = false;
    }
    return os.str();
}

std::string describe(const Hypergraph& h) {
    std::ostringstream os;
    os << "H=" << h.order() << ':';
    for (const auto& e : h.edges()) os << e.to_string();
    return os.str();
}

std::string format_check(const CheckResult& c) {
    return (c.ok ? "ok " : "FAIL ") + c.id + (c.detail.empty() ? "" : " " + c.detail);
}

bool all_ok(const Report& r) {
    for (const auto& c : r) {
        if (!c.ok) return false;
    }
    return true;
}

Report verify_thm1(const SimpleGraph& g) {
    const unsigned n = g.order();
    const IntPolynomial p = chrom_poly(h_apex(g));
    const IntPolynomial indep = independence_poly(g);
    const IntPolynomial rhs = apex_transform(indep.coeffs(), n);
    Report r;
    r.push_back(poly_equality("apex-identity", describe(g), p, rhs));
    const unsigned alpha = static_cast<unsigned>(indep.degree());
    const unsigned mult = root_multiplicity(p, Integer(1));
    std::ostringstream os;
    os << describe(g) << " mult1=" << mult << " n-alpha=" << n - alpha;
    r.push_back({"apex-root1-multiplicity", mult == n - alpha, os.str()});
    return r;
}

Report verify_thm2(const Multigraph& g) {
    const long n = g.order();
    const long m = static_cast<long>(g.size());
    const long c = component_count(g);
    const IntPolynomial lhs = chrom_poly(h_edge(g));
    const LaurentPolynomial x_sub(IntPolynomial{1, 0, -1});
    const LaurentPolynomial y_sub = LaurentPolynomial::monomial(1, 0) + LaurentPolynomial::monomial(-1, -1);
    const int sign = (n + c) % 2 == 0 ? 1 : -1;
    const IntPolynomial rhs = bivar_specialize(tutte_dc(g), x_sub, y_sub, m - n + 2 * c, sign);
    return {poly_equality("tutte-identity", describe(g), lhs, rhs)};
}

Report verify_cor2(const Multigraph& g) {
    const BivarLaurent t = tutte_dc(g);
    Report r;
    {
        const Integer count = count_totally_cyclic(g);
        const Rational t02 = tutte_eval(t, 0, 2);
        const Rational p = abs(eval(chrom_poly(h_edge(g)), Rational(-1)));
        std::ostringstream os;
        os << describe(g) << " orientations=" << count.get_str() << " T(0,2)=" << t02.get_str()
           << " |P(H_G,-1)|=" << p.get_str();
        r.push_back({"totally-cyclic-count", Rational(count) == t02 && t02 == p, os.str()});
    }
    {
        const Integer count = count_acyclic(g);
        const Rational t20 = tutte_eval(t, 2, 0);
        const Rational p = abs(eval(chrom_poly(as_hypergraph(g)), Rational(-1)));
        std::ostringstream os;
        os << describe(g) << " orientations=" << count.get_str() << " T(2,0)=" << t20.get_str()
           << " |P(G,-1)|=" << p.get_str();
        r.push_back({"acyclic-count", Rational(count) == t20 && t20 == p, os.str()});
    }
    return r;
}

CheckResult verify_apex_vertex_recursion(const SimpleGraph& g, unsigned v) {
    if (v >= g.order()) throw std::out_of_range("vertex out of range");
    const IntPolynomial lhs = chrom_poly(h_apex(g));
    const IntPolynomial rhs =
        kLambdaMinus1 * chrom_poly(h_apex(g.remove(VertexSet::single(v)))) +
        pow(kLambdaMinus1, g.degree(v)) * chrom_poly(h_apex(g.remove(g.closed_neighbourhood(v))));
    return poly_equality("apex-vertex-recursion", describe(g) + " v=" + std::to_string(v), lhs, rhs);
}

Report verify_per_edge_cases(const Multigraph& g, std::optional<std::size_t> e) {
    Report r;
    const IntPolynomial p = chrom_poly(h_edge(g));
    if (g.size() == 0) {
        r.push_back(poly_equality("per-edge-empty", describe(g), p, IntPolynomial::monomial(1, g.order())));
        return r;
    }
    if (!e) return r;
    const std::string subject = describe(g) + " e=" + std::to_string(*e);
    if (is_loop(g, *e)) {
        r.push_back(poly_equality("per-edge-loop", subject, p, kLambdaMinus1 * chrom_poly(h_edge(delete_edge(g, *e)))));
    } else if (is_bridge(g, *e)) {
        r.push_back(poly_equality("per-edge-bridge", subject, p,
                                  IntPolynomial{-1, 0, 1} * chrom_poly(h_edge(contract_edge(g, *e)))));
    }
    return r;
}

CheckResult verify_per_edge_recursion(const Multigraph& g, std::size_t e) {
    const IntPolynomial lhs = chrom_poly(h_edge(g));
    const IntPolynomial rhs = kLambda * chrom_poly(h_edge(delete_edge(g, e))) - chrom_poly(h_edge(contract_edge(g, e)));
    return poly_equality("per-edge-recursion", describe(g) + " e=" + std::to_string(e), lhs, rhs);
}

CheckResult verify_plus_k1(const Hypergraph& h) {
    const IntPolynomial lhs = chrom_poly(plus_k1(h));
    const IntPolynomial rhs = kLambda * shift(chrom_poly(h), Integer(-1));
    return poly_equality("plus-k1-shift", describe(h), lhs, rhs);
}

CheckResult verify_addition_identification(const Hypergraph& h, VertexSet e) {
    const IntPolynomial lhs = chrom_poly(h);
    const IntPolynomial rhs = chrom_poly(add_edge(h, e)) + chrom_poly(identify(h, e));
    return poly_equality("addition-identification", describe(h) + " e=" + e.to_string(), lhs, rhs);
}

LambdaSquaredCheck lambda_sq_check(const Hypergraph& h) {
    if (!is_connected(h)) throw std::invalid_argument("requires a connected hypergraph");
    LambdaSquaredCheck out;
    const auto b = bridges(h);
    if (b.size() < h.size()) {
        std::vector<VertexSet> bridge_edges;
        for (std::size_t i : b) bridge_edges.push_back(h.edge(i));
        out.hypothesis_holds = is_connected(Hypergraph(h.order(), std::move(bridge_edges)));
    }
    out.divisible = divisible_by_power(chrom_poly(h), Integer(0), 2);
    return out;
}

FactorDecision lambda_minus1_sq_decide(const Hypergraph& h, const std::optional<Separation>& sep) {
    if (!is_connected(h)) throw std::invalid_argument("requires a connected hypergraph");
    if (!is_sperner(h)) throw std::invalid_argument("requires a Sperner hypergraph");
    if (h.size() < 2) throw std::invalid_argument("requires at least two edges");
    FactorDecision d;
    const VertexSet f = common_vertices(h);
    if (!f.empty()) {
        d.rule = "common-vertices";
        d.predicted = f.size() == 1;
    } else {
        if (!sep) throw std::invalid_argument("requires a separation when F(H) is empty");
        if (!is_valid_separation(h, *sep)) throw std::invalid_argument("invalid separation");
        d.rule = "separation";
        d.predicted = predict_with_separation(h, *sep, d.rule);
    }
    d.actual = has_lambda_minus1_sq(h);
    return d;
}

SeparationSums main4_sums(const Hypergraph& h, const Separation& sep) {
    if (!is_connected(h)) throw std::invalid_argument("requires a connected hypergraph");
    if (!is_valid_separation(h, sep)) throw std::invalid_argument("invalid separation");
    SeparationSums s;
    for (VertexSet v0 : independent_sets_containing(h, sep.w)) {
        if (!sep.side1.subset_of(v0) && !sep.side2.subset_of(v0)) continue;
        const Hypergraph rest = remove(h, v0);
        const IntPolynomial p = chrom_poly(rest);
        s.all += p;
        if (is_connected(rest)) s.connected += p;
    }
    s.all_divisible = divisible_by_power(s.all, Integer(0), 2);
    s.connected_divisible = divisible_by_power(s.connected, Integer(0), 2);
    s.factor = has_lambda_minus1_sq(h);
    return s;
}

NegativeRootWitness negative_root_witness(unsigned k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    NegativeRootWitness w{complete_graph(k + 1), Rational(-static_cast<long>(k)), Rational(0)};
    w.value = eval(chrom_poly(h_apex(w.graph)), w.root);
    return w;
}

RootCensus real_root_census(const Hypergraph& h, unsigned precision_bits) {
    RootCensus c;
    c.polynomial = chrom_poly(h);
    c.degree = c.polynomial.degree();
    if (c.polynomial.is_zero()) return c;
    c.roots = sturm_real_roots(c.polynomial, precision_bits);
    for (const auto& r : c.roots) c.real_count += r.multiplicity;
    return c;
}

CoefficientPattern coefficient_pattern(const Hypergraph& h) {
    CoefficientPattern cp;
    cp.min_edge_size = h.min_edge_size();
    if (h.size() > 0 && cp.min_edge_size < 2) throw std::invalid_argument("coefficient patterns require edges of size >= 2");
    cp.order = h.order();
    cp.graph_input = h.is_graph();
    cp.polynomial = chrom_poly(h);
    const unsigned n = cp.order;
    const auto b = [&](unsigned i) { return cp.polynomial.coeff(i); };

    if (h.size() == 0 || cp.min_edge_size - 1 > n) {
        cp.gap_holds = true;
    } else {
        const unsigned gap = cp.min_edge_size - 1;
        cp.gap_holds = b(n - gap) != 0;
        for (unsigned j = 1; j < gap; ++j) cp.gap_holds = cp.gap_holds && b(n - j) == 0;
    }

    cp.alternating = true;
    bool in_block = true;
    for (unsigned k = 0; k <= n; ++k) {
        const unsigned i = n - k;
        const int s = sgn(b(i));
        if (s == 0) {
            in_block = false;
            continue;
        }
        const int expected = k % 2 == 0 ? 1 : -1;
        if (!in_block || s != expected) cp.alternating = false;
    }

    cp.log_concave = true;
    for (unsigned k = 1; k + 1 < n; ++k) {
        const Integer mid = abs(b(n - k));
        if (mid * mid < abs(b(n - k + 1)) * abs(b(n - k - 1))) cp.log_concave = false;
    }
    return cp;
}

Report CoefficientPattern::assertions() const {
    Report r;
    std::ostringstream os;
    os << "n=" << order << " min_edge=" << min_edge_size << " P=[" << format_poly(polynomial) << "]";
    if (graph_input) {
        r.push_back({"sign-alternation", alternating, os.str()});
        r.push_back({"log-concavity", log_concave, os.str()});
    }
    if (min_edge_size >= 3) r.push_back({"coefficient-gap", gap_holds, os.str()});
    return r;
}

}  // namespace hypchrom
