#include "hypchrom/independence.hpp"

#include <stdexcept>
#include <unordered_map>

namespace hypchrom {

SimpleGraph::SimpleGraph(unsigned n) : adj_(n) {
    if (n > kMaxVertices) throw std::invalid_argument("graph order exceeds 64 vertices");
}

SimpleGraph::SimpleGraph(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges) : SimpleGraph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(unsigned u, unsigned v) {
    if (u >= order() || v >= order()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("simple graphs have no loops");
    if (adj_[u].contains(v)) throw std::invalid_argument("simple graphs have no parallel edges");
    adj_[u].insert(v);
    adj_[v].insert(u);
}

SimpleGraph SimpleGraph::from_multigraph(const Multigraph& g) {
    SimpleGraph s(g.order());
    for (const auto& e : g.edges()) s.add_edge(e.u, e.v);
    return s;
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
}

std::vector<std::pair<unsigned, unsigned>> SimpleGraph::edge_list() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned u = 0; u < order(); ++u) {
        for (unsigned v : adj_[u].members()) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Multigraph SimpleGraph::to_multigraph() const {
    std::vector<EdgeEnds> edges;
    for (const auto& [u, v] : edge_list()) edges.push_back({u, v});
    return Multigraph(order(), std::move(edges));
}

Hypergraph SimpleGraph::to_hypergraph() const {
    std::vector<VertexSet> edges;
    for (const auto& [u, v] : edge_list()) edges.push_back(VertexSet{u, v});
    return Hypergraph(order(), std::move(edges));
}

SimpleGraph SimpleGraph::remove(VertexSet s) const {
    std::vector<unsigned> newid(order(), 0);
    unsigned next = 0;
    for (unsigned v = 0; v < order(); ++v) {
        if (!s.contains(v)) newid[v] = next++;
    }
    SimpleGraph out(next);
    for (const auto& [u, v] : edge_list()) {
        if (!s.contains(u) && !s.contains(v)) out.add_edge(newid[u], newid[v]);
    }
    return out;
}

unsigned max_degree_pivot(const SimpleGraph& g, VertexSet alive) {
    unsigned best = alive.min();
    unsigned best_deg = 0;
    for (unsigned v : alive.members()) {
        unsigned d = (g.neighbours(v) & alive).size();
        if (d > best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

IntPolynomial independence_poly(const SimpleGraph& g, const PivotRule& pivot) {
    std::unordered_map<std::uint64_t, IntPolynomial> memo;
    const IntPolynomial x = IntPolynomial::monomial(1, 1);
    auto rec = [&](auto&& self, VertexSet alive) -> IntPolynomial {
        if (alive.empty()) return IntPolynomial::constant(1);
        if (auto it = memo.find(alive.bits()); it != memo.end()) return it->second;
        unsigned v = pivot(g, alive);
        if (!alive.contains(v)) throw std::logic_error("pivot rule returned a dead vertex");
        VertexSet without_v = alive;
        without_v.erase(v);
        IntPolynomial r = self(self, without_v) + x * self(self, alive - g.closed_neighbourhood(v));
        memo.emplace(alive.bits(), r);
        return r;
    };
    return rec(rec, VertexSet::range(g.order()));
}

IntPolynomial independence_brute(const SimpleGraph& g) {
    const unsigned n = g.order();
    if (n > 25) throw std::invalid_argument("brute-force independence enumeration limited to 25 vertices");
    std::vector<Integer> counts(n + 1);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        VertexSet set(s);
        bool independent = true;
        for (unsigned v : set.members()) {
            if (g.neighbours(v).intersects(set)) {
                independent = false;
                break;
            }
        }
        if (independent) counts[set.size()] += 1;
    }
    return IntPolynomial(std::move(counts));
}

unsigned independence_number(const SimpleGraph& g) {
    return static_cast<unsigned>(independence_poly(g).degree());
}

bool is_clawfree(const SimpleGraph& g) {
    // A claw is a centre adjacent to three pairwise non-adjacent vertices.
    for (unsigned c = 0; c < g.order(); ++c) {
        const auto nb = g.neighbours(c).members();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace hypchrom
