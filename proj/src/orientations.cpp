#include "hypchrom/orientations.hpp"

#include <stdexcept>
#include <vector>

namespace hypchrom {
namespace {

// reach[v]: vertices reachable from v by a directed path of length >= 0.
std::vector<std::uint64_t> reachability(const Multigraph& g, Orientation o) {
    const unsigned n = g.order();
    std::vector<std::uint64_t> reach(n);
    for (unsigned v = 0; v < n; ++v) reach[v] = std::uint64_t{1} << v;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.edges()[i];
        unsigned from = o.reversed(i) ? e.v : e.u;
        unsigned to = o.reversed(i) ? e.u : e.v;
        reach[from] |= std::uint64_t{1} << to;
    }
    // Warshall closure on bit rows.
    for (unsigned k = 0; k < n; ++k) {
        const std::uint64_t kbit = std::uint64_t{1} << k;
        for (unsigned v = 0; v < n; ++v) {
            if (reach[v] & kbit) reach[v] |= reach[k];
        }
    }
    return reach;
}

void check_size(const Multigraph& g) {
    if (g.size() > kOrientationMaxEdges) throw std::invalid_argument("orientation enumeration cutoff");
    if (g.order() > 64) throw std::invalid_argument("orientation enumeration supports at most 64 vertices");
}

// Every edge, loops included, has two directions.
template <class Pred>
Integer count_orientations(const Multigraph& g, Pred pred) {
    check_size(g);
    Integer count = 0;
    const std::uint64_t total = std::uint64_t{1} << g.size();
    for (std::uint64_t s = 0; s < total; ++s) {
        if (pred(Orientation{s})) count += 1;
    }
    return count;
}

}  // namespace

bool is_acyclic(const Multigraph& g, Orientation o) {
    for (const auto& e : g.edges()) {
        if (e.is_loop()) return false;
    }
    const auto reach = reachability(g, o);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.edges()[i];
        unsigned from = o.reversed(i) ? e.v : e.u;
        unsigned to = o.reversed(i) ? e.u : e.v;
        if (reach[to] & (std::uint64_t{1} << from)) return false;
    }
    return true;
}

bool is_totally_cyclic(const Multigraph& g, Orientation o) {
    const auto reach = reachability(g, o);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.edges()[i];
        if (e.is_loop()) continue;
        unsigned from = o.reversed(i) ? e.v : e.u;
        unsigned to = o.reversed(i) ? e.u : e.v;
        if (!(reach[to] & (std::uint64_t{1} << from))) return false;
    }
    return true;
}

Integer count_acyclic(const Multigraph& g) {
    return count_orientations(g, [&](Orientation o) { return is_acyclic(g, o); });
}

Integer count_totally_cyclic(const Multigraph& g) {
    return count_orientations(g, [&](Orientation o) { return is_totally_cyclic(g, o); });
}

}  // namespace hypchrom
