#pragma once

// Multigraphs with loops and parallel edges. Edges are identified by index.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hypchrom {

struct EdgeEnds {
    unsigned u = 0;
    unsigned v = 0;
    bool is_loop() const { return u == v; }
    friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(unsigned n, std::vector<EdgeEnds> edges = {});

    unsigned order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<EdgeEnds>& edges() const { return edges_; }
    const EdgeEnds& edge(std::size_t i) const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    unsigned n_ = 0;
    std::vector<EdgeEnds> edges_;
};

/// Edge subsets of graphs with at most 64 edges, bit i standing for edge i.
using EdgeMask = std::uint64_t;

/// c(A): components of the spanning subgraph (V, A).
unsigned component_count(const Multigraph& g, EdgeMask a);
unsigned component_count(const Multigraph& g);
EdgeMask all_edges(const Multigraph& g);
/// r(A) = |V| - c(A).
unsigned rank(const Multigraph& g, EdgeMask a);

bool is_loop(const Multigraph& g, std::size_t i);
/// Non-loop edge whose removal increases the component count.
bool is_bridge(const Multigraph& g, std::size_t i);

Multigraph delete_edge(const Multigraph& g, std::size_t i);
/// Removes edge i and merges its ends into the smaller one (survivors keep
/// relative order). Contracting a loop deletes it.
Multigraph contract_edge(const Multigraph& g, std::size_t i);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// `p mg <n> <m>` followed by `a u v` lines; loops are `a u u`.
std::string format_multigraph(const Multigraph& g);
Multigraph parse_multigraph(const std::string& text);

}  // namespace hypchrom
