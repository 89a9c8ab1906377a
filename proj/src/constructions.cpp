#include "hypchrom/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hypchrom {

Hypergraph h_apex(const SimpleGraph& g) {
    const unsigned apex = g.order();
    std::vector<VertexSet> edges;
    for (const auto& [u, v] : g.edge_list()) edges.push_back(VertexSet{u, v, apex});
    return Hypergraph(apex + 1, std::move(edges));
}

Hypergraph h_edge(const Multigraph& g) {
    const unsigned n = g.order();
    if (n + g.size() > kMaxVertices) throw std::invalid_argument("per-edge construction exceeds 64 vertices");
    std::vector<VertexSet> edges;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.edges()[i];
        edges.push_back(VertexSet{e.u, e.v, n + static_cast<unsigned>(i)});
    }
    return Hypergraph(n + static_cast<unsigned>(g.size()), std::move(edges));
}

Hypergraph family_st(unsigned s, unsigned t) {
    if (s < 1 || t < 1) throw std::invalid_argument("family_st requires s >= 1 and t >= 1");
    const unsigned n = 1 + s + t;
    if (n > kMaxVertices) throw std::invalid_argument("family_st exceeds 64 vertices");
    VertexSet xs, ys;
    for (unsigned i = 1; i <= s; ++i) xs.insert(i);
    for (unsigned j = 1; j <= t; ++j) ys.insert(s + j);
    std::vector<VertexSet> edges{ys};
    for (unsigned j = 1; j <= t; ++j) edges.push_back(VertexSet::single(0) | xs | VertexSet::single(s + j));
    return Hypergraph(n, std::move(edges));
}

Hypergraph attach(const Hypergraph& base, unsigned w, const std::vector<std::size_t>& extended,
                  unsigned extra, const std::vector<VertexSet>& assignment) {
    if (extra == 0) throw std::invalid_argument("attachment needs at least one new vertex");
    if (extended.size() != assignment.size()) throw std::invalid_argument("one vertex subset per extended edge");
    if (base.order() + extra > kMaxVertices) throw std::invalid_argument("attachment exceeds 64 vertices");
    const unsigned n = base.order();
    std::vector<VertexSet> edges = base.edges();
    VertexSet covered;
    for (std::size_t k = 0; k < extended.size(); ++k) {
        const std::size_t idx = extended[k];
        if (!base.edge(idx).contains(w)) throw std::invalid_argument("extended edge does not contain w");
        if (!assignment[k].subset_of(VertexSet::range(extra))) throw std::invalid_argument("assigned vertex out of range");
        covered |= assignment[k];
        edges[idx] |= VertexSet(assignment[k].bits() << n);
    }
    if (covered != VertexSet::range(extra)) throw std::invalid_argument("attachment not connected");
    return Hypergraph(n + extra, std::move(edges));
}

Hypergraph complete_hypergraph(unsigned p) {
    std::vector<VertexSet> edges;
    for (unsigned u = 0; u < p; ++u) {
        for (unsigned v = u + 1; v < p; ++v) edges.push_back(VertexSet{u, v});
    }
    return Hypergraph(p, std::move(edges));
}

Hypergraph theorem3_instance() {
    return Hypergraph(4, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}, VertexSet{0, 1}});
}

Hypergraph figure1b() {
    return h_edge(double_edge());
}

Multigraph double_edge() {
    return Multigraph(2, {{0, 1}, {0, 1}});
}

Multigraph cycle_multigraph(unsigned n) {
    std::vector<EdgeEnds> edges;
    for (unsigned i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Multigraph(n, std::move(edges));
}

SimpleGraph complete_graph(unsigned n) {
    SimpleGraph g(n);
    for (unsigned u = 0; u < n; ++u) {
        for (unsigned v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

SimpleGraph path_graph(unsigned n) {
    SimpleGraph g(n);
    for (unsigned i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph cycle_graph(unsigned n) {
    if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
    SimpleGraph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

SimpleGraph star_graph(unsigned leaves) {
    SimpleGraph g(leaves + 1);
    for (unsigned i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Hypergraph as_hypergraph(const Multigraph& g) {
    std::vector<VertexSet> edges;
    for (const auto& e : g.edges()) edges.push_back(VertexSet{e.u, e.v});
    return Hypergraph(g.order(), std::move(edges));
}

namespace {

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

VertexSet random_subset(Rng& rng, const std::vector<unsigned>& pool, unsigned size) {
    std::vector<unsigned> v = pool;
    std::shuffle(v.begin(), v.end(), rng);
    VertexSet s;
    for (unsigned k = 0; k < size && k < v.size(); ++k) s.insert(v[k]);
    return s;
}

}  // namespace

Hypergraph HypergraphSampler::operator()(Rng& rng) const {
    for (;;) {
        const unsigned n = uniform(rng, min_n, max_n);
        const unsigned m = uniform(rng, min_m, max_m);
        std::vector<unsigned> pool(n);
        std::iota(pool.begin(), pool.end(), 0U);
        const unsigned lo = std::min(min_size, n);
        const unsigned hi = std::min(max_size, n);
        std::vector<VertexSet> edges;
        for (unsigned i = 0; i < m; ++i) edges.push_back(random_subset(rng, pool, uniform(rng, lo, hi)));
        Hypergraph h(n, std::move(edges));
        if (!connected || is_connected(h)) return h;
    }
}

SimpleGraph random_simple_graph(Rng& rng, unsigned n, double p) {
    std::bernoulli_distribution coin(p);
    SimpleGraph g(n);
    for (unsigned u = 0; u < n; ++u) {
        for (unsigned v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

Multigraph random_multigraph(Rng& rng, unsigned n, unsigned m) {
    if (n == 0 && m > 0) throw std::invalid_argument("edges need vertices");
    std::vector<EdgeEnds> edges;
    for (unsigned i = 0; i < m; ++i) edges.push_back({uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)});
    return Multigraph(n, std::move(edges));
}

Hypergraph random_separable_sperner(Rng& rng, unsigned min_n, unsigned max_n) {
    if (min_n < 3) throw std::invalid_argument("separable instances need at least 3 vertices");
    for (;;) {
        const unsigned n = uniform(rng, min_n, max_n);
        std::vector<unsigned> side_a, side_b;
        side_a.push_back(1);
        side_b.push_back(2);
        for (unsigned v = 3; v < n; ++v) (uniform(rng, 0, 1) == 0 ? side_a : side_b).push_back(v);
        std::vector<unsigned> all(n - 1);
        std::iota(all.begin(), all.end(), 1U);
        std::vector<unsigned> with_w_a = side_a, with_w_b = side_b;
        with_w_a.push_back(0);
        with_w_b.push_back(0);
        const unsigned m = uniform(rng, 2, 6);
        std::vector<VertexSet> edges;
        for (unsigned i = 0; i < m; ++i) {
            switch (uniform(rng, 0, 2)) {
                case 0:
                    edges.push_back(random_subset(rng, with_w_a, uniform(rng, 2, static_cast<unsigned>(with_w_a.size()))));
                    break;
                case 1:
                    edges.push_back(random_subset(rng, with_w_b, uniform(rng, 2, static_cast<unsigned>(with_w_b.size()))));
                    break;
                default:
                    edges.push_back(VertexSet::single(0) |
                                    random_subset(rng, all, uniform(rng, 1, std::min(3U, n - 1))));
                    break;
            }
        }
        Hypergraph h = sperner_reduce(Hypergraph(n, std::move(edges)));
        if (h.size() < 2 || !is_connected(h)) continue;
        if (separations(h, 0).empty()) continue;
        return h;
    }
}

}  // namespace hypchrom
