#pragma once

// Hypergraphs on at most 64 vertices with the structural operations the
// chromatic recurrences need.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hypchrom {

inline constexpr unsigned kMaxVertices = 64;

/// A subset of {0, ..., 63} stored as a bitmask. Iteration and members()
/// visit vertices in increasing order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<unsigned> vs);

    static constexpr VertexSet range(unsigned n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(unsigned v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(unsigned v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    /// Smallest member; undefined on the empty set.
    constexpr unsigned min() const { return static_cast<unsigned>(std::countr_zero(bits_)); }
    constexpr unsigned max() const { return 63U - static_cast<unsigned>(std::countl_zero(bits_)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& insert(unsigned v) { bits_ |= std::uint64_t{1} << v; return *this; }
    VertexSet& erase(unsigned v) { bits_ &= ~(std::uint64_t{1} << v); return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    std::vector<unsigned> members() const;
    /// Lexicographic order on the sorted member sequences.
    static bool lex_less(VertexSet a, VertexSet b);
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

/// H = (V, E) with V = {0, ..., n-1} and E an ordered multiset of non-empty
/// vertex subsets. Size-1 edges are legal and mean "no weak colouring exists".
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(unsigned n, std::vector<VertexSet> edges = {});

    unsigned order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(std::size_t i) const;
    VertexSet vertices() const { return VertexSet::range(n_); }

    /// True when every edge has size 2.
    bool is_graph() const;
    unsigned min_edge_size() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    unsigned n_ = 0;
    std::vector<VertexSet> edges_;
};

/// Maximal connected vertex sets (isolated vertices are singletons), ordered
/// by smallest member.
std::vector<VertexSet> components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);
/// Components that contain at least one edge.
unsigned edge_components(const Hypergraph& h);

Hypergraph delete_edge(const Hypergraph& h, std::size_t index);
Hypergraph add_edge(const Hypergraph& h, VertexSet e);

/// H·V0: identifies V0 to one vertex placed at min(V0); survivors keep their
/// relative order. Edges meeting V0 become (e - V0) ∪ {w}; duplicates created
/// by the mapping are collapsed.
Hypergraph identify(const Hypergraph& h, VertexSet v0);
/// H/e = (H - e)·e.
Hypergraph contract_edge(const Hypergraph& h, std::size_t index);

/// H[V0], renumbered so V0's members become 0..|V0|-1 in order.
Hypergraph induced(const Hypergraph& h, VertexSet v0);
/// H - V0 = H[V - V0].
Hypergraph remove(const Hypergraph& h, VertexSet v0);
/// Removes w together with every edge containing it.
Hypergraph delete_vertex_closed(const Hypergraph& h, unsigned w);
/// Adds vertex n joined by a 2-edge to every existing vertex.
Hypergraph plus_k1(const Hypergraph& h);
/// Disjoint union, second operand's vertices shifted by first.order().
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

/// Edges whose deletion increases the component count.
std::vector<std::size_t> bridges(const Hypergraph& h);

/// F(H): vertices common to every edge. Throws on an empty edge set.
VertexSet common_vertices(const Hypergraph& h);

/// Drops every edge containing another edge and collapses duplicates; the
/// first occurrence of each surviving edge is kept in order.
Hypergraph sperner_reduce(const Hypergraph& h);
bool is_sperner(const Hypergraph& h);

/// V0 ∈ I(H): no edge is a subset of V0.
bool is_independent(const Hypergraph& h, VertexSet v0);
/// All V0 ∈ I(H) with w ∈ V0, in lexicographic order.
std::vector<VertexSet> independent_sets_containing(const Hypergraph& h, unsigned w);

struct Separation {
    unsigned w = 0;
    VertexSet side1;
    VertexSet side2;
};

/// Every split (V1, V2) with V1 ∩ V2 = {w}, V1 ∪ V2 = V, built by grouping
/// the components of H - w into two non-empty sides. Throws on disconnected H.
std::vector<Separation> separations(const Hypergraph& h, unsigned w);

/// V1 ∪ V2 = V, V1 ∩ V2 = {w}, both proper, and every edge either contains
/// w or lies inside one side.
bool is_valid_separation(const Hypergraph& h, const Separation& s);

/// `p hg <n> <m>` followed by `e v1 v2 ...` lines; `c` lines are comments.
std::string format_hypergraph(const Hypergraph& h);
Hypergraph parse_hypergraph(const std::string& text);

}  // namespace hypchrom
