#include <gtest/gtest.h>

#include <algorithm>

#include "hypchrom/constructions.hpp"
#include "hypchrom/hypergraph.hpp"
#include "hypchrom/parse_error.hpp"

using namespace hypchrom;

TEST(VertexSet, Basics) {
    const VertexSet a{0, 2, 5};
    EXPECT_EQ(a.size(), 3U);
    EXPECT_TRUE(a.contains(2));
    EXPECT_FALSE(a.contains(1));
    EXPECT_EQ(a.min(), 0U);
    EXPECT_EQ(a.max(), 5U);
    EXPECT_TRUE(VertexSet({0, 5}).subset_of(a));
    EXPECT_EQ((a - VertexSet{0}), (VertexSet{2, 5}));
    EXPECT_EQ((a & VertexSet{2, 3}), VertexSet::single(2));
    EXPECT_EQ(a.members(), (std::vector<unsigned>{0, 2, 5}));
    EXPECT_EQ(a.to_string(), "{0,2,5}");
    EXPECT_EQ(VertexSet::range(3), (VertexSet{0, 1, 2}));
}

TEST(VertexSet, LexOrder) {
    EXPECT_TRUE(VertexSet::lex_less(VertexSet{0, 1}, VertexSet{0, 2}));
    EXPECT_TRUE(VertexSet::lex_less(VertexSet{0, 1}, VertexSet{0, 1, 2}));
    EXPECT_TRUE(VertexSet::lex_less(VertexSet{0, 5}, VertexSet{1}));
    EXPECT_FALSE(VertexSet::lex_less(VertexSet{1}, VertexSet{1}));
}

TEST(Hypergraph, RejectsInvalidEdges) {
    EXPECT_THROW(Hypergraph(3, {VertexSet{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(3, {VertexSet{}}), std::invalid_argument);
}

TEST(Hypergraph, TextRoundTrip) {
    const Hypergraph h = theorem3_instance();
    const std::string text = format_hypergraph(h);
    EXPECT_EQ(text, "p hg 4 3\ne 0 1 2\ne 0 1 3\ne 0 1\n");
    EXPECT_EQ(parse_hypergraph(text), h);
    EXPECT_EQ(parse_hypergraph("c hello\n\np hg 2 1\nc edge next\ne 1 0\n"), Hypergraph(2, {VertexSet{0, 1}}));
}

TEST(Hypergraph, ParseErrorsCarryPosition) {
    using Pos = std::pair<std::size_t, std::size_t>;
    auto position = [](const std::string& text) -> Pos {
        try {
            parse_hypergraph(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    EXPECT_EQ(position("p hg 3 1\ne 0 7\n"), Pos(2, 5));
    EXPECT_EQ(position("p hg 3 1\ne\n"), Pos(2, 1));
    EXPECT_EQ(position("p hg 3 2\ne 0 1\n").first, 2U);
    EXPECT_EQ(position("p mg 3 1\ne 0 1\n"), Pos(1, 3));
    EXPECT_EQ(position("p hg 3 1\ne 0 x\n"), Pos(2, 5));
}

TEST(Hypergraph, ComponentsAndConnectivity) {
    const Hypergraph h(5, {VertexSet{0, 1}, VertexSet{2, 3}});
    const auto c = components(h);
    ASSERT_EQ(c.size(), 3U);
    EXPECT_EQ(c[0], (VertexSet{0, 1}));
    EXPECT_EQ(c[2], VertexSet::single(4));
    EXPECT_EQ(edge_components(h), 2U);
    EXPECT_FALSE(is_connected(h));
    EXPECT_TRUE(is_connected(figure1b()));
    EXPECT_TRUE(is_connected(Hypergraph(1)));
}

TEST(Hypergraph, Bridges) {
    // the two triple edges are bridges; the pair {0,1} is not
    EXPECT_EQ(bridges(theorem3_instance()), (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(bridges(complete_hypergraph(3)).empty());
    EXPECT_EQ(bridges(Hypergraph(3, {VertexSet{0, 1, 2}})).size(), 1U);
}

TEST(Hypergraph, CommonVertices) {
    EXPECT_EQ(common_vertices(figure1b()), (VertexSet{0, 1}));
    EXPECT_TRUE(common_vertices(complete_hypergraph(3)).empty());
    EXPECT_THROW(common_vertices(Hypergraph(3)), std::invalid_argument);
}

TEST(Hypergraph, SpernerReduction) {
    const Hypergraph h(4, {VertexSet{0, 1, 2}, VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{0, 1}});
    const Hypergraph r = sperner_reduce(h);
    EXPECT_EQ(r, Hypergraph(4, {VertexSet{0, 1}, VertexSet{2, 3}}));
    EXPECT_FALSE(is_sperner(h));
    EXPECT_TRUE(is_sperner(r));
    EXPECT_FALSE(is_sperner(theorem3_instance()));
}

TEST(Hypergraph, IdentifyAndContract) {
    // identifying {1,2} in the path 0-1-2-3
    const Hypergraph path(4, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}});
    const Hypergraph merged = identify(path, VertexSet{1, 2});
    EXPECT_EQ(merged.order(), 3U);
    // the edge {1,2} collapses to a single vertex
    EXPECT_EQ(merged.edges(), (std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{1}, VertexSet{1, 2}}));
    const Hypergraph contracted = contract_edge(path, 1);
    EXPECT_EQ(contracted, Hypergraph(3, {VertexSet{0, 1}, VertexSet{1, 2}}));
    // duplicates produced by identification collapse
    const Hypergraph tri = complete_hypergraph(3);
    EXPECT_EQ(identify(tri, VertexSet{1, 2}).size(), 2U);
}

TEST(Hypergraph, InducedRemoveAndPlusK1) {
    const Hypergraph h = figure1b();
    const Hypergraph sub = induced(h, VertexSet{0, 1, 3});
    EXPECT_EQ(sub, Hypergraph(3, {VertexSet{0, 1, 2}}));
    EXPECT_EQ(remove(h, VertexSet{0}), Hypergraph(3));
    EXPECT_EQ(delete_vertex_closed(h, 2), Hypergraph(3, {VertexSet{0, 1, 2}}));
    const Hypergraph k = plus_k1(Hypergraph(2));
    EXPECT_EQ(k, Hypergraph(3, {VertexSet{0, 2}, VertexSet{1, 2}}));
    const Hypergraph u = disjoint_union(Hypergraph(2, {VertexSet{0, 1}}), Hypergraph(1));
    EXPECT_EQ(u, Hypergraph(3, {VertexSet{0, 1}}));
}

TEST(Hypergraph, IndependentSetsMatchSubsetFilter) {
    Rng rng(31);
    const HypergraphSampler sample;
    for (int i = 0; i < 100; ++i) {
        const Hypergraph h = sample(rng);
        const unsigned w = static_cast<unsigned>(i) % h.order();
        std::vector<VertexSet> expected;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.order()); ++s) {
            const VertexSet v(s);
            if (!v.contains(w)) continue;
            bool indep = std::none_of(h.edges().begin(), h.edges().end(), [&](VertexSet e) { return e.subset_of(v); });
            if (indep) expected.push_back(v);
        }
        std::sort(expected.begin(), expected.end(), VertexSet::lex_less);
        EXPECT_EQ(independent_sets_containing(h, w), expected);
    }
}

TEST(Hypergraph, Separations) {
    const Hypergraph h = family_st(1, 2);  // w=0, x=1, y=2,3
    const auto seps = separations(h, 0);
    ASSERT_EQ(seps.size(), 1U);
    EXPECT_EQ(seps[0].side1, (VertexSet{0, 1}));
    EXPECT_EQ(seps[0].side2, (VertexSet{0, 2, 3}));
    EXPECT_TRUE(is_valid_separation(h, seps[0]));
    EXPECT_FALSE(is_valid_separation(h, Separation{0, VertexSet{0, 2}, VertexSet{0, 1, 3}}));
    // x plays the same role as w
    EXPECT_EQ(separations(h, 1).size(), 1U);
    EXPECT_TRUE(separations(h, 2).empty());
    EXPECT_THROW(separations(Hypergraph(3, {VertexSet{0, 1}}), 0), std::invalid_argument);

    // a star on three leaves splits three ways into 2^(3-1) - 1 separations
    const Hypergraph star(4, {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{0, 3}});
    const auto star_seps = separations(star, 0);
    EXPECT_EQ(star_seps.size(), 3U);
    for (const auto& s : star_seps) {
        EXPECT_TRUE(is_valid_separation(star, s));
        EXPECT_TRUE(s.side1.contains(1));
    }
}

TEST(Hypergraph, IsIndependent) {
    const Hypergraph h = family_st(1, 2);
    EXPECT_TRUE(is_independent(h, VertexSet{0, 1}));
    EXPECT_FALSE(is_independent(h, VertexSet{0, 2, 3}));
    EXPECT_TRUE(is_independent(h, VertexSet{}));
}
