#include <gtest/gtest.h>

#include "hypchrom/constructions.hpp"
#include "hypchrom/enumerate.hpp"

using namespace hypchrom;

TEST(Constructions, Apex) {
    EXPECT_EQ(h_apex(complete_graph(2)), Hypergraph(3, {VertexSet{0, 1, 2}}));
    EXPECT_EQ(h_apex(SimpleGraph(1)), Hypergraph(2));
    EXPECT_EQ(h_apex(complete_graph(3)), Hypergraph(4, {VertexSet{0, 1, 3}, VertexSet{0, 2, 3}, VertexSet{1, 2, 3}}));
}

TEST(Constructions, ApexEdgesAllContainTheApex) {
    for (unsigned n = 1; n <= 4; ++n) {
        for_each_simple_graph(n, [n](const SimpleGraph& g) {
            const Hypergraph h = h_apex(g);
            EXPECT_EQ(h.size(), g.edge_count());
            for (const auto& e : h.edges()) {
                EXPECT_TRUE(e.contains(n));
                EXPECT_EQ(e.size(), 3U);
            }
        });
    }
}

TEST(Constructions, PerEdge) {
    EXPECT_EQ(figure1b(), Hypergraph(4, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}}));
    EXPECT_EQ(h_edge(Multigraph(2, {{0, 1}})), Hypergraph(3, {VertexSet{0, 1, 2}}));
    EXPECT_EQ(h_edge(Multigraph(1, {{0, 0}})), Hypergraph(2, {VertexSet{0, 1}}));
}

TEST(Constructions, PerEdgeVerticesAreEdgePrivate) {
    Rng rng(61);
    for (int i = 0; i < 50; ++i) {
        const Multigraph g = random_multigraph(rng, 4, 5);
        const Hypergraph h = h_edge(g);
        for (unsigned k = 0; k < g.size(); ++k) {
            unsigned hits = 0;
            for (const auto& e : h.edges()) hits += e.contains(g.order() + k);
            EXPECT_EQ(hits, 1U);
        }
    }
    // two vertex-disjoint edges leave no common vertex
    EXPECT_TRUE(common_vertices(h_edge(Multigraph(4, {{0, 1}, {2, 3}}))).empty());
}

TEST(Constructions, FamilySt) {
    EXPECT_EQ(family_st(1, 2), Hypergraph(4, {VertexSet{2, 3}, VertexSet{0, 1, 2}, VertexSet{0, 1, 3}}));
    const Hypergraph h22 = family_st(2, 2);
    EXPECT_EQ(h22.order(), 5U);
    EXPECT_EQ(h22.size(), 3U);
    EXPECT_EQ(h22.edge(0).size(), 2U);
    EXPECT_EQ(h22.edge(1).size(), 4U);
    EXPECT_EQ(family_st(1, 1).edge(0).size(), 1U);
    EXPECT_THROW(family_st(0, 2), std::invalid_argument);
    for (unsigned s = 1; s <= 3; ++s) {
        for (unsigned t = 2; t <= 4; ++t) {
            const Hypergraph h = family_st(s, t);
            EXPECT_TRUE(is_connected(h));
            EXPECT_TRUE(is_sperner(h));
            EXPECT_FALSE(separations(h, 0).empty());
        }
    }
}

TEST(Constructions, Attach) {
    // family_st(1,2) arises from a triangle core {w,y1,y2} by attaching x to both w-edges
    const Hypergraph core(3, {VertexSet{1, 2}, VertexSet{0, 1}, VertexSet{0, 2}});
    const Hypergraph grown = attach(core, 0, {1, 2}, 1, {VertexSet{0}, VertexSet{0}});
    EXPECT_EQ(grown, Hypergraph(4, {VertexSet{1, 2}, VertexSet{0, 1, 3}, VertexSet{0, 2, 3}}));
    const Hypergraph one = attach(core, 0, {1}, 1, {VertexSet{0}});
    EXPECT_EQ(one.edge(1), (VertexSet{0, 1, 3}));
    EXPECT_EQ(one.edge(2), (VertexSet{0, 2}));
    EXPECT_THROW(attach(core, 0, {1}, 2, {VertexSet{0}}), std::invalid_argument);
    EXPECT_THROW(attach(core, 0, {0}, 1, {VertexSet{0}}), std::invalid_argument);
}

TEST(Constructions, Fixtures) {
    EXPECT_EQ(complete_hypergraph(3), Hypergraph(3, {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{1, 2}}));
    EXPECT_EQ(complete_hypergraph(0), Hypergraph(0));
    EXPECT_EQ(as_hypergraph(Multigraph(2, {{0, 1}, {1, 1}})), Hypergraph(2, {VertexSet{0, 1}, VertexSet{1}}));
}

TEST(Constructions, SamplersHonourTheirBounds) {
    Rng rng(62);
    const HypergraphSampler sample;
    for (int i = 0; i < 200; ++i) {
        const Hypergraph h = sample(rng);
        EXPECT_GE(h.order(), 3U);
        EXPECT_LE(h.order(), 6U);
        EXPECT_GE(h.size(), 2U);
        EXPECT_LE(h.size(), 7U);
        EXPECT_TRUE(is_connected(h));
        for (const auto& e : h.edges()) {
            EXPECT_GE(e.size(), 2U);
            EXPECT_LE(e.size(), 4U);
        }
    }
    for (int i = 0; i < 100; ++i) {
        const Hypergraph h = random_separable_sperner(rng);
        EXPECT_TRUE(is_connected(h));
        EXPECT_TRUE(is_sperner(h));
        EXPECT_GE(h.size(), 2U);
        EXPECT_FALSE(separations(h, 0).empty());
    }
}
