#include "hypchrom/chromatic.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

namespace hypchrom {
namespace {

using Key = std::vector<std::uint64_t>;

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t x : k) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Relabels vertices by first appearance in the lexicographically sorted edge
// list. Not isomorphism-complete; equal keys still imply isomorphic inputs.
Key canonical_key(const Hypergraph& h) {
    std::vector<VertexSet> edges = h.edges();
    std::sort(edges.begin(), edges.end(), VertexSet::lex_less);
    std::array<int, kMaxVertices> label;
    label.fill(-1);
    unsigned next = 0;
    for (const auto& e : edges) {
        for (unsigned v : e.members()) {
            if (label[v] < 0) label[v] = static_cast<int>(next++);
        }
    }
    Key key;
    key.reserve(edges.size() + 1);
    key.push_back(h.order());
    std::vector<std::uint64_t> mapped;
    for (const auto& e : edges) {
        std::uint64_t b = 0;
        for (unsigned v : e.members()) b |= std::uint64_t{1} << label[v];
        mapped.push_back(b);
    }
    std::sort(mapped.begin(), mapped.end());
    key.insert(key.end(), mapped.begin(), mapped.end());
    return key;
}

// A vertex w whose removal (keeping the remainders of edges through w)
// disconnects the rest; every edge then sits inside one side.
bool find_clean_cut(const Hypergraph& h, VertexSet& side1, VertexSet& side2) {
    const VertexSet all = h.vertices();
    for (unsigned w = 0; w < h.order(); ++w) {
        const VertexSet rest = all - VertexSet::single(w);
        if (rest.empty()) continue;
        VertexSet comp = VertexSet::single(rest.min());
        bool grown = true;
        while (grown) {
            grown = false;
            for (const auto& e : h.edges()) {
                VertexSet r = e - VertexSet::single(w);
                if (r.intersects(comp) && !r.subset_of(comp)) {
                    comp |= r;
                    grown = true;
                }
            }
        }
        if (comp != rest) {
            side1 = comp | VertexSet::single(w);
            side2 = (rest - comp) | VertexSet::single(w);
            return true;
        }
    }
    return false;
}

class DeletionContraction {
public:
    IntPolynomial solve(const Hypergraph& input) {
        for (const auto& e : input.edges()) {
            if (e.size() == 1) return {};
        }
        const Hypergraph h = sperner_reduce(input);
        if (h.size() == 0) return IntPolynomial::monomial(1, h.order());

        const auto comps = components(h);
        if (comps.size() > 1) {
            IntPolynomial r = IntPolynomial::constant(1);
            for (const auto& c : comps) {
                r *= solve(induced(h, c));
                if (r.is_zero()) break;
            }
            return r;
        }

        const Key key = canonical_key(h);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        IntPolynomial result;
        VertexSet s1, s2;
        if (find_clean_cut(h, s1, s2)) {
            result = divide_exact(solve(induced(h, s1)) * solve(induced(h, s2)), IntPolynomial::monomial(1, 1));
        } else {
            std::size_t pivot = 0;
            for (std::size_t i = 1; i < h.size(); ++i) {
                if (h.edge(i).size() < h.edge(pivot).size()) pivot = i;
            }
            result = solve(delete_edge(h, pivot)) - solve(contract_edge(h, pivot));
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    std::unordered_map<Key, IntPolynomial, KeyHash> memo_;
};

// Edges grouped by their largest vertex, for checks during vertex-ordered
// enumeration.
std::vector<std::vector<VertexSet>> edges_by_max(const Hypergraph& h) {
    std::vector<std::vector<VertexSet>> out(h.order());
    for (const auto& e : h.edges()) out[e.max()].push_back(e);
    return out;
}

}  // namespace

IntPolynomial chrom_poly(const Hypergraph& h) {
    DeletionContraction dc;
    return dc.solve(h);
}

Integer chrom_count(const Hypergraph& h, unsigned k) {
    const unsigned n = h.order();
    if (n > 8) throw std::invalid_argument("colouring enumeration limited to 8 vertices");
    const auto by_max = edges_by_max(h);
    std::array<unsigned, 8> colour{};
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, unsigned v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (unsigned c = 0; c < k; ++c) {
            colour[v] = c;
            bool ok = true;
            for (const auto& e : by_max[v]) {
                bool mono = true;
                for (unsigned u : e.members()) {
                    if (colour[u] != c) {
                        mono = false;
                        break;
                    }
                }
                if (mono) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, v + 1);
        }
    };
    rec(rec, 0);
    return Integer(static_cast<unsigned long>(count));
}

IntPolynomial chrom_interpolate(const Hypergraph& h) {
    const unsigned n = h.order();
    if (n > 7) throw std::invalid_argument("interpolation limited to 7 vertices");
    // Newton form in the falling-factorial basis: P = Σ Δ^k P(0) / k! · (λ)_k.
    std::vector<Integer> diff;
    for (unsigned k = 0; k <= n; ++k) diff.push_back(chrom_count(h, k));
    IntPolynomial result;
    Integer factorial = 1;
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) factorial *= k;
        const Integer& delta = diff[0];
        if (delta % factorial != 0) throw std::logic_error("non-integer interpolation coefficient");
        result += falling_factorial(k) * Integer(delta / factorial);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    return result;
}

IntPolynomial chrom_partition(const Hypergraph& h) {
    const unsigned n = h.order();
    if (n > 10) throw std::invalid_argument("partition enumeration limited to 10 vertices");
    const auto by_max = edges_by_max(h);
    std::vector<Integer> by_blocks(n + 1);
    std::array<unsigned, 10> block{};
    // Restricted growth strings: vertex v joins an existing block or opens block `used`.
    auto rec = [&](auto&& self, unsigned v, unsigned used) -> void {
        if (v == n) {
            by_blocks[used] += 1;
            return;
        }
        for (unsigned b = 0; b <= used; ++b) {
            block[v] = b;
            bool ok = true;
            for (const auto& e : by_max[v]) {
                const auto members = e.members();
                if (std::all_of(members.begin(), members.end(), [&](unsigned u) { return block[u] == b; })) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, v + 1, b == used ? used + 1 : used);
        }
    };
    rec(rec, 0, 0);
    IntPolynomial result;
    for (unsigned k = 0; k <= n; ++k) {
        if (by_blocks[k] != 0) result += falling_factorial(k) * by_blocks[k];
    }
    return result;
}

IntPolynomial chrom_level(const Hypergraph& h, unsigned w) {
    if (w >= h.order()) throw std::out_of_range("vertex out of range");
    IntPolynomial sum;
    for (VertexSet v0 : independent_sets_containing(h, w)) {
        sum += shift(chrom_poly(remove(h, v0)), Integer(-1));
    }
    return sum * IntPolynomial::monomial(1, 1);
}

IntPolynomial whitney_coeffs(const Hypergraph& h) {
    if (h.size() > 20) throw std::invalid_argument("spanning sub-hypergraph enumeration limited to 20 edges");
    const unsigned n = h.order();
    std::vector<Integer> coeffs(n + 1);
    const std::uint64_t total = std::uint64_t{1} << h.size();
    std::vector<VertexSet> chosen;
    for (std::uint64_t a = 0; a < total; ++a) {
        chosen.clear();
        for (std::size_t i = 0; i < h.size(); ++i) {
            if ((a >> i) & 1U) chosen.push_back(h.edges()[i]);
        }
        const unsigned c = static_cast<unsigned>(components(Hypergraph(n, chosen)).size());
        if (chosen.size() % 2 == 0) {
            coeffs[c] += 1;
        } else {
            coeffs[c] -= 1;
        }
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial clique_cut_factor(const Hypergraph& h, VertexSet side1, VertexSet side2, unsigned p) {
    const VertexSet overlap = side1 & side2;
    if ((side1 | side2) != h.vertices() || overlap.size() != p) throw std::invalid_argument("not a clique cut");
    for (const auto& e : h.edges()) {
        if (!e.subset_of(side1) && !e.subset_of(side2)) throw std::invalid_argument("not a clique cut");
    }
    const auto members = overlap.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const VertexSet pair{members[i], members[j]};
            if (std::find(h.edges().begin(), h.edges().end(), pair) == h.edges().end()) {
                throw std::invalid_argument("not a clique cut");
            }
        }
    }
    return divide_exact(chrom_poly(induced(h, side1)) * chrom_poly(induced(h, side2)), falling_factorial(p));
}

}  // namespace hypchrom
