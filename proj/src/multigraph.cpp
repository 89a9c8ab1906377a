#include "hypchrom/multigraph.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "text_lines.hpp"

namespace hypchrom {

Multigraph::Multigraph(unsigned n, std::vector<EdgeEnds> edges) : n_(n), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
}

const EdgeEnds& Multigraph::edge(std::size_t i) const {
    if (i >= edges_.size()) throw std::out_of_range("edge index out of range");
    return edges_[i];
}

namespace {

struct DisjointSets {
    std::vector<unsigned> parent;
    unsigned count;

    explicit DisjointSets(unsigned n) : parent(n), count(n) { std::iota(parent.begin(), parent.end(), 0U); }

    unsigned find(unsigned x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(unsigned a, unsigned b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent[b] = a;
        --count;
    }
};

}  // namespace

unsigned component_count(const Multigraph& g, EdgeMask a) {
    DisjointSets ds(g.order());
    for (std::size_t i = 0; i < g.size() && i < 64; ++i) {
        if ((a >> i) & 1U) ds.unite(g.edges()[i].u, g.edges()[i].v);
    }
    return ds.count;
}

unsigned component_count(const Multigraph& g) {
    DisjointSets ds(g.order());
    for (const auto& e : g.edges()) ds.unite(e.u, e.v);
    return ds.count;
}

EdgeMask all_edges(const Multigraph& g) {
    if (g.size() > 64) throw std::invalid_argument("edge masks support at most 64 edges");
    return g.size() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << g.size()) - 1;
}

unsigned rank(const Multigraph& g, EdgeMask a) {
    return g.order() - component_count(g, a);
}

bool is_loop(const Multigraph& g, std::size_t i) {
    return g.edge(i).is_loop();
}

bool is_bridge(const Multigraph& g, std::size_t i) {
    if (g.edge(i).is_loop()) return false;
    return component_count(delete_edge(g, i)) > component_count(g);
}

Multigraph delete_edge(const Multigraph& g, std::size_t i) {
    if (i >= g.size()) throw std::out_of_range("edge index out of range");
    std::vector<EdgeEnds> edges = g.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
    return Multigraph(g.order(), std::move(edges));
}

Multigraph contract_edge(const Multigraph& g, std::size_t i) {
    const EdgeEnds e = g.edge(i);
    Multigraph rest = delete_edge(g, i);
    if (e.is_loop()) return rest;
    const unsigned keep = std::min(e.u, e.v);
    const unsigned gone = std::max(e.u, e.v);
    auto relabel = [&](unsigned x) {
        if (x == gone) x = keep;
        return x > gone ? x - 1 : x;
    };
    std::vector<EdgeEnds> edges;
    edges.reserve(rest.size());
    for (const auto& f : rest.edges()) edges.push_back({relabel(f.u), relabel(f.v)});
    return Multigraph(g.order() - 1, std::move(edges));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    std::vector<EdgeEnds> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
    return Multigraph(a.order() + b.order(), std::move(edges));
}

std::string format_multigraph(const Multigraph& g) {
    std::ostringstream os;
    os << "p mg " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) os << "a " << e.u << ' ' << e.v << '\n';
    return os.str();
}

Multigraph parse_multigraph(const std::string& text) {
    const auto lines = detail::scan_lines(text);
    const auto [n, m] = detail::parse_header(lines, "mg");
    if (lines.size() - 1 != m) {
        const auto& at = lines.size() - 1 < m ? lines.back() : lines[m + 1];
        throw ParseError(at.number, 1, "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
    }
    std::vector<EdgeEnds> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.front().text != "a") throw ParseError(line.number, line.tokens.front().column, "expected an `a` line");
        if (line.tokens.size() != 3) throw ParseError(line.number, line.tokens.front().column, "expected `a u v`");
        unsigned long ends[2];
        for (std::size_t t = 0; t < 2; ++t) {
            ends[t] = detail::parse_unsigned(line, line.tokens[t + 1]);
            if (ends[t] >= n) throw ParseError(line.number, line.tokens[t + 1].column, "vertex id " + line.tokens[t + 1].text + " out of range");
        }
        edges.push_back({static_cast<unsigned>(ends[0]), static_cast<unsigned>(ends[1])});
    }
    return Multigraph(static_cast<unsigned>(n), std::move(edges));
}

}  // namespace hypchrom
