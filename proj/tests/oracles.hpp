#pragma once

// Slow, independent reference implementations used only by the tests.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "hypchrom/hypergraph.hpp"
#include "hypchrom/multigraph.hpp"
#include "hypchrom/poly.hpp"

namespace oracle {

using hypchrom::Hypergraph;
using hypchrom::Integer;
using hypchrom::IntPolynomial;
using hypchrom::Multigraph;
using hypchrom::Rational;

// Number of colourings with k colours leaving no edge monochromatic, by
// decoding every integer in [0, k^n) as a colour vector.
inline Integer colourings(const Hypergraph& h, unsigned k) {
    const unsigned n = h.order();
    if (n == 0) return 1;
    if (k == 0) return 0;
    unsigned long total = 1;
    for (unsigned i = 0; i < n; ++i) total *= k;
    Integer count = 0;
    std::vector<unsigned> colour(n);
    for (unsigned long code = 0; code < total; ++code) {
        unsigned long c = code;
        for (unsigned v = 0; v < n; ++v) {
            colour[v] = static_cast<unsigned>(c % k);
            c /= k;
        }
        bool proper = true;
        for (const auto& e : h.edges()) {
            const auto vs = e.members();
            bool mono = true;
            for (unsigned v : vs) mono = mono && colour[v] == colour[vs.front()];
            if (mono) {
                proper = false;
                break;
            }
        }
        if (proper) count += 1;
    }
    return count;
}

// Lagrange interpolation through (k, colourings(h, k)) for k = 0..n.
inline IntPolynomial chromatic_by_lagrange(const Hypergraph& h) {
    const unsigned n = h.order();
    std::vector<Rational> result(n + 1, Rational(0));
    for (unsigned i = 0; i <= n; ++i) {
        // basis polynomial L_i = Π_{j≠i} (x - j) / (i - j)
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (unsigned j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * static_cast<long>(j);
            }
            basis = std::move(next);
            denom *= static_cast<long>(i) - static_cast<long>(j);
        }
        const Rational yi = Rational(colourings(h, i)) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) result[d] += yi * basis[d];
    }
    std::vector<Integer> coeffs;
    for (auto& c : result) {
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("non-integral interpolant");
        coeffs.push_back(c.get_num());
    }
    return IntPolynomial(std::move(coeffs));
}

inline unsigned find(std::vector<unsigned>& parent, unsigned v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

// T_G(x, y) by the rank-nullity subset expansion, ranks from union-find.
inline Rational tutte_value(const Multigraph& g, const Rational& x, const Rational& y) {
    const unsigned n = g.order();
    const std::size_t m = g.size();
    auto rank_of = [&](std::uint64_t mask) {
        std::vector<unsigned> parent(n);
        std::iota(parent.begin(), parent.end(), 0U);
        unsigned r = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!((mask >> i) & 1U)) continue;
            unsigned a = find(parent, g.edge(i).u), b = find(parent, g.edge(i).v);
            if (a != b) {
                parent[a] = b;
                ++r;
            }
        }
        return r;
    };
    const unsigned full = rank_of((std::uint64_t{1} << m) - 1);
    Rational total = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
        const unsigned r = rank_of(a);
        const unsigned size = static_cast<unsigned>(__builtin_popcountll(a));
        Rational term = 1;
        for (unsigned i = 0; i < full - r; ++i) term *= x - 1;
        for (unsigned i = 0; i < size - r; ++i) term *= y - 1;
        total += term;
    }
    return total;
}

struct OrientationCounts {
    Integer acyclic = 0;
    Integer totally_cyclic = 0;
};

// Each edge (loops included) gets both directions. Acyclicity by repeated
// removal of sources; total cyclicity by a DFS from each arc's head.
inline OrientationCounts orientation_counts(const Multigraph& g) {
    const unsigned n = g.order();
    const std::size_t m = g.size();
    OrientationCounts out;
    for (std::uint64_t o = 0; o < (std::uint64_t{1} << m); ++o) {
        std::vector<std::pair<unsigned, unsigned>> arcs;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& e = g.edge(i);
            arcs.emplace_back((o >> i) & 1U ? std::make_pair(e.v, e.u) : std::make_pair(e.u, e.v));
        }
        std::vector<unsigned> indeg(n, 0);
        for (const auto& [a, b] : arcs) ++indeg[b];
        std::vector<bool> gone(n, false);
        unsigned removed = 0;
        for (bool progress = true; progress;) {
            progress = false;
            for (unsigned v = 0; v < n; ++v) {
                if (gone[v] || indeg[v] != 0) continue;
                gone[v] = true;
                ++removed;
                progress = true;
                for (const auto& [a, b] : arcs) {
                    if (a == v) --indeg[b];
                }
            }
        }
        if (removed == n) out.acyclic += 1;

        bool all_on_cycles = true;
        for (const auto& [tail, head] : arcs) {
            std::vector<bool> seen(n, false);
            std::vector<unsigned> stack{head};
            seen[head] = true;
            while (!stack.empty()) {
                unsigned v = stack.back();
                stack.pop_back();
                for (const auto& [a, b] : arcs) {
                    if (a == v && !seen[b]) {
                        seen[b] = true;
                        stack.push_back(b);
                    }
                }
            }
            if (!seen[tail]) {
                all_on_cycles = false;
                break;
            }
        }
        if (all_on_cycles) out.totally_cyclic += 1;
    }
    return out;
}

}  // namespace oracle
