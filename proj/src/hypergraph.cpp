#include "hypchrom/hypergraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "text_lines.hpp"

namespace hypchrom {
namespace {

// Packs the bits of x selected by mask into the low bits, preserving order.
std::uint64_t compress_bits(std::uint64_t x, std::uint64_t mask) {
    std::uint64_t out = 0;
    unsigned pos = 0;
    while (mask != 0) {
        std::uint64_t low = mask & (~mask + 1);
        if ((x & low) != 0) out |= std::uint64_t{1} << pos;
        ++pos;
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<unsigned> vs) {
    for (unsigned v : vs) {
        if (v >= kMaxVertices) throw std::invalid_argument("vertex id out of range");
        insert(v);
    }
}

std::vector<unsigned> VertexSet::members() const {
    std::vector<unsigned> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
    return out;
}

bool VertexSet::lex_less(VertexSet a, VertexSet b) {
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    unsigned d = static_cast<unsigned>(std::countr_zero(diff));
    // Below d the sequences agree; the set holding d continues with d, the
    // other either ends (and is a prefix) or continues with something larger.
    if (a.contains(d)) return d < 63 && (b.bits_ >> (d + 1)) != 0;
    return !(d < 63 && (a.bits_ >> (d + 1)) != 0);
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (unsigned v : members()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

Hypergraph::Hypergraph(unsigned n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
    if (n > kMaxVertices) throw std::invalid_argument("hypergraph order exceeds 64 vertices");
    for (const auto& e : edges_) {
        if (e.empty()) throw std::invalid_argument("empty edge");
        if (!e.subset_of(VertexSet::range(n))) throw std::invalid_argument("edge member out of range");
    }
}

const VertexSet& Hypergraph::edge(std::size_t i) const {
    if (i >= edges_.size()) throw std::out_of_range("edge index out of range");
    return edges_[i];
}

bool Hypergraph::is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 2; });
}

unsigned Hypergraph::min_edge_size() const {
    unsigned m = kMaxVertices + 1;
    for (const auto& e : edges_) m = std::min(m, e.size());
    return edges_.empty() ? 0 : m;
}

std::vector<VertexSet> components(const Hypergraph& h) {
    std::vector<VertexSet> out;
    VertexSet remaining = h.vertices();
    while (!remaining.empty()) {
        VertexSet comp = VertexSet::single(remaining.min());
        bool grown = true;
        while (grown) {
            grown = false;
            for (const auto& e : h.edges()) {
                if (e.intersects(comp) && !e.subset_of(comp)) {
                    comp |= e;
                    grown = true;
                }
            }
        }
        out.push_back(comp);
        remaining = remaining - comp;
    }
    return out;
}

bool is_connected(const Hypergraph& h) {
    return components(h).size() <= 1;
}

unsigned edge_components(const Hypergraph& h) {
    unsigned c = 0;
    for (const auto& comp : components(h)) {
        if (std::any_of(h.edges().begin(), h.edges().end(), [&](VertexSet e) { return e.subset_of(comp); })) ++c;
    }
    return c;
}

Hypergraph delete_edge(const Hypergraph& h, std::size_t index) {
    if (index >= h.size()) throw std::out_of_range("edge index out of range");
    std::vector<VertexSet> edges = h.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
    return Hypergraph(h.order(), std::move(edges));
}

Hypergraph add_edge(const Hypergraph& h, VertexSet e) {
    if (e.empty()) throw std::invalid_argument("cannot add an empty edge");
    std::vector<VertexSet> edges = h.edges();
    edges.push_back(e);
    return Hypergraph(h.order(), std::move(edges));
}

Hypergraph identify(const Hypergraph& h, VertexSet v0) {
    if (v0.empty()) throw std::invalid_argument("cannot identify an empty vertex set");
    if (!v0.subset_of(h.vertices())) throw std::invalid_argument("identified set out of range");
    const VertexSet merged = VertexSet::single(v0.min());
    const VertexSet keep = h.vertices() - (v0 - merged);
    std::vector<VertexSet> edges;
    edges.reserve(h.size());
    for (const auto& e : h.edges()) {
        if (!e.intersects(v0)) {
            edges.emplace_back(compress_bits(e.bits(), keep.bits()));
            continue;
        }
        VertexSet image(compress_bits(((e - v0) | merged).bits(), keep.bits()));
        if (std::find(edges.begin(), edges.end(), image) == edges.end()) edges.push_back(image);
    }
    return Hypergraph(keep.size(), std::move(edges));
}

Hypergraph contract_edge(const Hypergraph& h, std::size_t index) {
    VertexSet e = h.edge(index);
    return identify(delete_edge(h, index), e);
}

Hypergraph induced(const Hypergraph& h, VertexSet v0) {
    if (!v0.subset_of(h.vertices())) throw std::invalid_argument("induced set out of range");
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges()) {
        if (e.subset_of(v0)) edges.emplace_back(compress_bits(e.bits(), v0.bits()));
    }
    return Hypergraph(v0.size(), std::move(edges));
}

Hypergraph remove(const Hypergraph& h, VertexSet v0) {
    return induced(h, h.vertices() - v0);
}

Hypergraph delete_vertex_closed(const Hypergraph& h, unsigned w) {
    if (w >= h.order()) throw std::out_of_range("vertex out of range");
    return remove(h, VertexSet::single(w));
}

Hypergraph plus_k1(const Hypergraph& h) {
    if (h.order() >= kMaxVertices) throw std::invalid_argument("hypergraph order exceeds 64 vertices");
    std::vector<VertexSet> edges = h.edges();
    const unsigned u = h.order();
    for (unsigned v = 0; v < u; ++v) edges.push_back(VertexSet{v, u});
    return Hypergraph(u + 1, std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    if (a.order() + b.order() > kMaxVertices) throw std::invalid_argument("hypergraph order exceeds 64 vertices");
    std::vector<VertexSet> edges = a.edges();
    for (const auto& e : b.edges()) edges.emplace_back(e.bits() << a.order());
    return Hypergraph(a.order() + b.order(), std::move(edges));
}

std::vector<std::size_t> bridges(const Hypergraph& h) {
    const std::size_t base = components(h).size();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (components(delete_edge(h, i)).size() > base) out.push_back(i);
    }
    return out;
}

VertexSet common_vertices(const Hypergraph& h) {
    if (h.size() == 0) throw std::invalid_argument("F undefined on empty edge set");
    VertexSet f = h.vertices();
    for (const auto& e : h.edges()) f &= e;
    return f;
}

Hypergraph sperner_reduce(const Hypergraph& h) {
    const auto& e = h.edges();
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < e.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < e.size() && !drop; ++j) {
            if (i == j) continue;
            if (e[j] == e[i]) {
                drop = j < i;  // keep the first copy
            } else if (e[j].subset_of(e[i])) {
                drop = true;
            }
        }
        if (!drop) kept.push_back(e[i]);
    }
    return Hypergraph(h.order(), std::move(kept));
}

bool is_sperner(const Hypergraph& h) {
    const auto& e = h.edges();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (i != j && e[i].subset_of(e[j])) return false;
        }
    }
    return true;
}

bool is_independent(const Hypergraph& h, VertexSet v0) {
    return std::none_of(h.edges().begin(), h.edges().end(), [&](VertexSet e) { return e.subset_of(v0); });
}

std::vector<VertexSet> independent_sets_containing(const Hypergraph& h, unsigned w) {
    if (w >= h.order()) throw std::out_of_range("vertex out of range");
    std::vector<VertexSet> out;
    const VertexSet start = VertexSet::single(w);
    if (!is_independent(h, start)) return out;
    const std::vector<unsigned> others = (h.vertices() - start).members();
    // Independence is hereditary, so extending only independent sets is exhaustive.
    auto extend = [&](auto&& self, VertexSet cur, std::size_t from) -> void {
        out.push_back(cur);
        for (std::size_t k = from; k < others.size(); ++k) {
            VertexSet next = cur;
            next.insert(others[k]);
            if (is_independent(h, next)) self(self, next, k + 1);
        }
    };
    extend(extend, start, 0);
    std::sort(out.begin(), out.end(), VertexSet::lex_less);
    return out;
}

std::vector<Separation> separations(const Hypergraph& h, unsigned w) {
    if (w >= h.order()) throw std::out_of_range("vertex out of range");
    if (!is_connected(h)) throw std::invalid_argument("separations require a connected hypergraph");
    std::vector<VertexSet> kept;
    for (const auto& e : h.edges()) {
        if (!e.contains(w)) kept.push_back(e);
    }
    std::vector<VertexSet> parts;
    for (const auto& c : components(Hypergraph(h.order(), std::move(kept)))) {
        if (!c.contains(w)) parts.push_back(c);
    }
    std::vector<Separation> out;
    const std::size_t k = parts.size();
    if (k < 2 || k > 32) {
        if (k > 32) throw std::invalid_argument("too many parts to enumerate separations");
        return out;
    }
    const VertexSet wset = VertexSet::single(w);
    const std::uint64_t all_rest = (std::uint64_t{1} << (k - 1)) - 1;
    // Part 0 always sits on side 1; the mask picks which other parts join it.
    for (std::uint64_t mask = 0; mask < all_rest; ++mask) {
        VertexSet s1 = parts[0] | wset;
        VertexSet s2 = wset;
        for (std::size_t p = 1; p < k; ++p) {
            if ((mask >> (p - 1)) & 1U) {
                s1 |= parts[p];
            } else {
                s2 |= parts[p];
            }
        }
        out.push_back({w, s1, s2});
    }
    return out;
}

bool is_valid_separation(const Hypergraph& h, const Separation& s) {
    const VertexSet all = h.vertices();
    const VertexSet wset = VertexSet::single(s.w);
    if (s.w >= h.order()) return false;
    if ((s.side1 | s.side2) != all || (s.side1 & s.side2) != wset) return false;
    if (s.side1 == all || s.side2 == all) return false;
    return std::all_of(h.edges().begin(), h.edges().end(), [&](VertexSet e) {
        return e.contains(s.w) || e.subset_of(s.side1) || e.subset_of(s.side2);
    });
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream os;
    os << "p hg " << h.order() << ' ' << h.size() << '\n';
    for (const auto& e : h.edges()) {
        os << 'e';
        for (unsigned v : e.members()) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

Hypergraph parse_hypergraph(const std::string& text) {
    const auto lines = detail::scan_lines(text);
    const auto [n, m] = detail::parse_header(lines, "hg");
    if (n > kMaxVertices) throw ParseError(lines.front().number, lines.front().tokens[2].column, "at most 64 vertices supported");
    if (lines.size() - 1 != m) {
        const auto& at = lines.size() - 1 < m ? lines.back() : lines[m + 1];
        throw ParseError(at.number, 1, "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
    }
    std::vector<VertexSet> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.front().text != "e") throw ParseError(line.number, line.tokens.front().column, "expected an `e` line");
        if (line.tokens.size() < 2) throw ParseError(line.number, line.tokens.front().column, "empty edge");
        VertexSet e;
        for (std::size_t t = 1; t < line.tokens.size(); ++t) {
            unsigned long v = detail::parse_unsigned(line, line.tokens[t]);
            if (v >= n) throw ParseError(line.number, line.tokens[t].column, "vertex id " + line.tokens[t].text + " out of range");
            e.insert(static_cast<unsigned>(v));
        }
        edges.push_back(e);
    }
    return Hypergraph(static_cast<unsigned>(n), std::move(edges));
}

}  // namespace hypchrom
