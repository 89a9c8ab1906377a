#include "hypchrom/tutte.hpp"

#include <bit>
#include <stdexcept>

namespace hypchrom {

BivarLaurent tutte_subset(const Multigraph& g) {
    if (g.size() > kSubsetExpansionMaxEdges) throw std::invalid_argument("subset expansion cutoff");
    const EdgeMask full = all_edges(g);
    const unsigned rank_e = rank(g, full);
    // Tally subsets by (r(E)-r(A), |A|-r(A)), then expand the binomials once.
    std::map<std::pair<unsigned, unsigned>, Integer> tally;
    for (EdgeMask a = 0;; ++a) {
        const unsigned r = rank(g, a);
        const unsigned size = static_cast<unsigned>(std::popcount(a));
        tally[{rank_e - r, size - r}] += 1;
        if (a == full) break;
    }
    const BivarLaurent xm1 = BivarLaurent::x() - BivarLaurent::constant(1);
    const BivarLaurent ym1 = BivarLaurent::y() - BivarLaurent::constant(1);
    BivarLaurent sum;
    for (const auto& [exps, count] : tally) {
        BivarLaurent term = BivarLaurent::constant(count);
        for (unsigned i = 0; i < exps.first; ++i) term *= xm1;
        for (unsigned j = 0; j < exps.second; ++j) term *= ym1;
        sum += term;
    }
    return sum;
}

BivarLaurent tutte_dc(const Multigraph& g) {
    if (g.size() == 0) return BivarLaurent::constant(1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (is_loop(g, i)) return BivarLaurent::y() * tutte_dc(delete_edge(g, i));
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (is_bridge(g, i)) return BivarLaurent::x() * tutte_dc(contract_edge(g, i));
    }
    return tutte_dc(delete_edge(g, 0)) + tutte_dc(contract_edge(g, 0));
}

Rational tutte_eval(const BivarLaurent& t, const Rational& x, const Rational& y) {
    return eval(t, x, y);
}

}  // namespace hypchrom
