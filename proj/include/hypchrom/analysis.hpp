#pragma once

// Executable checks of the identities, factor criteria and coefficient facts
// relating hypergraph chromatic polynomials to independence and Tutte
// polynomials. Ground truth for every "has a factor" question is the root
// multiplicity of the exactly computed polynomial.

#include <optional>
#include <string>
#include <vector>

#include "hypchrom/hypergraph.hpp"
#include "hypchrom/independence.hpp"
#include "hypchrom/multigraph.hpp"
#include "hypchrom/poly.hpp"
#include "hypchrom/sturm.hpp"

namespace hypchrom {

struct CheckResult {
    std::string id;
    bool ok = false;
    std::string detail;
};

using Report = std::vector<CheckResult>;

/// `ok <id> <detail>` or `FAIL <id> <detail>`.
std::string format_check(const CheckResult& c);
bool all_ok(const Report& r);

/// Compact instance labels used in check details, e.g. `H=4:{0,1,2}{0,1,3}`.
std::string describe(const SimpleGraph& g);
std::string describe(const Multigraph& g);
std::string describe(const Hypergraph& h);

/// P(h_apex(G)) = λ(λ-1)^n I(G, 1/(λ-1)), and the multiplicity of the root 1
/// equals n - α(G).
Report verify_thm1(const SimpleGraph& g);

/// P(h_edge(G)) = λ^{m-n+2c} (-1)^{n+c} T_G(1-λ², (λ-1)/λ).
Report verify_thm2(const Multigraph& g);

/// Totally cyclic orientations = T_G(0,2) = |P(h_edge(G), -1)| and acyclic
/// orientations = T_G(2,0) = |P(G, -1)|.
Report verify_cor2(const Multigraph& g);

/// Apex vertex recursion:
/// P(H•G) = (λ-1) P(H•(G-v)) + (λ-1)^{d(v)} P(H•(G-N[v])).
CheckResult verify_apex_vertex_recursion(const SimpleGraph& g, unsigned v);
/// Per-edge construction rules: empty graph gives λ^n, a loop contributes
/// (λ-1), a bridge contributes (λ²-1) on contraction. Checks whichever apply
/// to edge e (or the empty case when G has no edges).
Report verify_per_edge_cases(const Multigraph& g, std::optional<std::size_t> e);
/// P(H_G) = λ P(H_{G-e}) - P(H_{G/e}).
CheckResult verify_per_edge_recursion(const Multigraph& g, std::size_t e);
/// P(H + K1, λ) = λ P(H, λ-1).
CheckResult verify_plus_k1(const Hypergraph& h);
/// P(H) = P(H + e) + P(H·e) for any vertex subset e.
CheckResult verify_addition_identification(const Hypergraph& h, VertexSet e);

struct LambdaSquaredCheck {
    bool hypothesis_holds = false;  // bridges proper and spanning-connected
    bool divisible = false;         // λ² | P(H)
    bool violated() const { return hypothesis_holds && !divisible; }
};

/// Requires a connected hypergraph.
LambdaSquaredCheck lambda_sq_check(const Hypergraph& h);

struct FactorDecision {
    bool predicted = false;
    bool actual = false;
    /// Which branch produced the prediction.
    std::string rule;
};

/// Predicts whether (λ-1)² | P(H) from the structure of a connected Sperner
/// H with at least two edges: if F(H) is non-empty the answer is |F(H)| = 1;
/// otherwise, for a separation (V1, V2) at w, the factor exists iff neither
/// side is independent, or exactly one side V_i is independent and the
/// factor divides P(H·V_i) (decided recursively where the same criterion
/// applies, directly otherwise). `actual` comes from the computed polynomial.
FactorDecision lambda_minus1_sq_decide(const Hypergraph& h, const std::optional<Separation>& sep);

struct SeparationSums {
    /// Σ P(H - V0) over independent V0 containing V1 or V2.
    IntPolynomial all;
    /// The same sum restricted to V0 with H - V0 connected.
    IntPolynomial connected;
    bool all_divisible = false;        // λ² | all
    bool connected_divisible = false;  // λ² | connected
    bool factor = false;               // (λ-1)² | P(H)
    bool consistent() const { return all_divisible == connected_divisible && connected_divisible == factor; }
};

SeparationSums main4_sums(const Hypergraph& h, const Separation& sep);

struct NegativeRootWitness {
    SimpleGraph graph;  // K_{k+1}
    Rational root;      // -k
    Rational value;     // P(h_apex(K_{k+1}), -k), zero when certified
    bool certified() const { return value == 0; }
};

NegativeRootWitness negative_root_witness(unsigned k);

struct RootCensus {
    IntPolynomial polynomial;
    int degree = -1;
    unsigned real_count = 0;  // with multiplicity
    std::vector<RootInterval> roots;
    bool all_real() const { return degree >= 0 && real_count == static_cast<unsigned>(degree); }
};

RootCensus real_root_census(const Hypergraph& h, unsigned precision_bits = kDefaultPrecisionBits);

struct CoefficientPattern {
    IntPolynomial polynomial;
    unsigned order = 0;
    unsigned min_edge_size = 0;
    bool graph_input = false;
    /// b_{n-j} = 0 for 1 <= j < h-1 and b_{n-h+1} != 0, h the minimum edge size.
    bool gap_holds = false;
    /// Non-zero coefficients form a contiguous block from λ^n down and alternate in sign.
    bool alternating = false;
    /// 1, |b_{n-1}|, ..., |b_1| is log-concave.
    bool log_concave = false;
    /// Checks asserted for this input: alternation and log-concavity for
    /// graphs, the gap for minimum edge size >= 3.
    Report assertions() const;
};

/// Requires every edge to have size >= 2.
CoefficientPattern coefficient_pattern(const Hypergraph& h);

}  // namespace hypchrom
