#include "hypchrom/enumerate.hpp"

#include <stdexcept>

namespace hypchrom {

void for_each_simple_graph(unsigned n, const std::function<void(const SimpleGraph&)>& fn) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned u = 0; u < n; ++u) {
        for (unsigned v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    if (pairs.size() > 30) throw std::invalid_argument("too many graphs to enumerate");
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        SimpleGraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
        }
        fn(g);
    }
}

void for_each_multigraph(unsigned n, unsigned m, EdgeOrder order, const std::function<void(const Multigraph&)>& fn) {
    std::vector<EdgeEnds> pairs;
    for (unsigned u = 0; u < n; ++u) {
        for (unsigned v = u; v < n; ++v) pairs.push_back({u, v});
    }
    if (pairs.empty()) {
        if (m == 0) fn(Multigraph(n));
        return;
    }
    std::vector<std::size_t> pick(m, 0);
    std::vector<EdgeEnds> edges(m);
    for (;;) {
        for (unsigned i = 0; i < m; ++i) edges[i] = pairs[pick[i]];
        fn(Multigraph(n, edges));
        // odometer increment; multisets keep pick non-decreasing
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && pick[i] + 1 == pairs.size()) --i;
        if (i < 0) return;
        ++pick[i];
        for (unsigned j = i + 1; j < m; ++j) pick[j] = order == EdgeOrder::multiset ? pick[i] : 0;
    }
}

}  // namespace hypchrom
