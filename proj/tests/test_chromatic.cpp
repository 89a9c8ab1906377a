#include <gtest/gtest.h>

#include "hypchrom/chromatic.hpp"
#include "hypchrom/constructions.hpp"
#include "oracles.hpp"

using namespace hypchrom;

namespace {

IntPolynomial lam() { return IntPolynomial{0, 1}; }
IntPolynomial lam_minus(long c) { return IntPolynomial::linear(Integer(c)); }

}  // namespace

TEST(Chromatic, DeletionContractionExamples) {
    EXPECT_EQ(chrom_poly(Hypergraph(3)), pow(lam(), 3));
    for (unsigned k = 2; k <= 5; ++k) {
        const Hypergraph h(k, {VertexSet::range(k)});
        EXPECT_EQ(chrom_poly(h), pow(lam(), k) - lam());
    }
    EXPECT_EQ(chrom_poly(figure1b()), (IntPolynomial{0, 1, -2, 0, 1}));
    EXPECT_EQ(chrom_poly(figure1b()), lam() * lam_minus(1) * IntPolynomial({-1, 1, 1}));
    EXPECT_EQ(chrom_poly(theorem3_instance()), (IntPolynomial{0, 0, 0, -1, 1}));
    EXPECT_TRUE(chrom_poly(family_st(1, 1)).is_zero());
    EXPECT_EQ(chrom_poly(Hypergraph(0)), IntPolynomial::constant(1));
}

TEST(Chromatic, Counts) {
    EXPECT_EQ(chrom_count(figure1b(), 2), 10);
    EXPECT_EQ(chrom_count(Hypergraph(3, {VertexSet{0, 1, 2}}), 2), 6);
    EXPECT_EQ(chrom_count(Hypergraph(3, {VertexSet{0, 1}, VertexSet{2}}), 5), 0);
    EXPECT_THROW(chrom_count(Hypergraph(9), 2), std::invalid_argument);
}

TEST(Chromatic, Interpolation) {
    EXPECT_EQ(chrom_interpolate(Hypergraph(3)), pow(lam(), 3));
    EXPECT_EQ(chrom_interpolate(Hypergraph(4, {VertexSet::range(4)})), pow(lam(), 4) - lam());
    EXPECT_EQ(chrom_interpolate(figure1b()), (IntPolynomial{0, 1, -2, 0, 1}));
    EXPECT_EQ(chrom_interpolate(theorem3_instance()), (IntPolynomial{0, 0, 0, -1, 1}));
    EXPECT_THROW(chrom_interpolate(Hypergraph(8)), std::invalid_argument);
}

TEST(Chromatic, PartitionSum) {
    EXPECT_EQ(chrom_partition(complete_hypergraph(3)), falling_factorial(3));
    EXPECT_EQ(chrom_partition(Hypergraph(2)), pow(lam(), 2));
    EXPECT_EQ(chrom_partition(Hypergraph(3, {VertexSet{0, 1, 2}})), (IntPolynomial{0, -1, 0, 1}));
    EXPECT_THROW(chrom_partition(Hypergraph(11)), std::invalid_argument);
}

TEST(Chromatic, LevelRecursion) {
    EXPECT_EQ(chrom_level(Hypergraph(2, {VertexSet{0, 1}}), 0), lam() * lam_minus(1));
    EXPECT_EQ(chrom_level(Hypergraph(1), 0), lam());
    const IntPolynomial expected = lam() * lam_minus(1) * IntPolynomial({-2, 0, 1});
    EXPECT_EQ(chrom_level(family_st(1, 2), 0), expected);
    EXPECT_EQ(chrom_poly(family_st(1, 2)), expected);
    EXPECT_THROW(chrom_level(Hypergraph(2), 2), std::out_of_range);
}

TEST(Chromatic, WhitneyCoefficients) {
    EXPECT_EQ(whitney_coeffs(Hypergraph(3, {VertexSet{0, 1, 2}})), (IntPolynomial{0, -1, 0, 1}));
    EXPECT_EQ(whitney_coeffs(theorem3_instance()).coeff(1), 0);
    EXPECT_EQ(whitney_coeffs(Hypergraph(4)), pow(lam(), 4));
    std::vector<VertexSet> many(21, VertexSet{0, 1});
    EXPECT_THROW(whitney_coeffs(Hypergraph(2, many)), std::invalid_argument);
}

TEST(Chromatic, CliqueCutFactor) {
    const Hypergraph path(3, {VertexSet{0, 1}, VertexSet{1, 2}});
    EXPECT_EQ(clique_cut_factor(path, VertexSet{0, 1}, VertexSet{1, 2}, 1), lam() * pow(lam_minus(1), 2));
    const Hypergraph apart(4, {VertexSet{0, 1}, VertexSet{2, 3}});
    EXPECT_EQ(clique_cut_factor(apart, VertexSet{0, 1}, VertexSet{2, 3}, 0), pow(lam() * lam_minus(1), 2));
    const Hypergraph diamond(4, {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{1, 2}, VertexSet{1, 3}, VertexSet{2, 3}});
    const IntPolynomial expected = lam() * lam_minus(1) * pow(lam_minus(2), 2);
    EXPECT_EQ(clique_cut_factor(diamond, VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, 2), expected);
    EXPECT_EQ(chrom_interpolate(diamond), expected);
    // overlap {1,2} without the edge 12 is not a clique
    const Hypergraph square(4, {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{1, 3}, VertexSet{2, 3}});
    EXPECT_THROW(clique_cut_factor(square, VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, 2), std::invalid_argument);
    EXPECT_THROW(clique_cut_factor(path, VertexSet{0, 1}, VertexSet{2}, 0), std::invalid_argument);
}

TEST(Chromatic, AllAlgorithmsAgreeWithBruteForce) {
    Rng rng(71);
    HypergraphSampler sample;
    sample.min_n = 1;
    sample.max_n = 6;
    sample.min_m = 0;
    sample.max_m = 8;
    sample.min_size = 1;
    sample.max_size = 4;
    sample.connected = false;
    std::vector<Hypergraph> cases{figure1b(), theorem3_instance(), complete_hypergraph(4), family_st(1, 2),
                                  family_st(2, 3)};
    for (int i = 0; i < 200; ++i) cases.push_back(sample(rng));
    for (const auto& h : cases) {
        const IntPolynomial expected = oracle::chromatic_by_lagrange(h);
        SCOPED_TRACE(format_hypergraph(h));
        EXPECT_EQ(chrom_poly(h), expected);
        EXPECT_EQ(chrom_interpolate(h), expected);
        EXPECT_EQ(chrom_partition(h), expected);
        EXPECT_EQ(whitney_coeffs(h), expected);
        if (h.order() > 0) EXPECT_EQ(chrom_level(h, h.order() - 1), expected);
    }
}

TEST(Chromatic, SpernerReductionPreservesThePolynomial) {
    Rng rng(72);
    const HypergraphSampler sample;
    for (int i = 0; i < 100; ++i) {
        Hypergraph h = sample(rng);
        // add a superset of an existing edge
        h = add_edge(h, h.edge(0) | VertexSet::single(static_cast<unsigned>(i) % h.order()));
        EXPECT_EQ(chrom_poly(h), chrom_poly(sperner_reduce(h)));
    }
}

TEST(Chromatic, DisjointUnionMultiplies) {
    Rng rng(73);
    const HypergraphSampler sample{2, 4, 1, 4, 2, 3, true};
    for (int i = 0; i < 50; ++i) {
        const Hypergraph a = sample(rng), b = sample(rng);
        EXPECT_EQ(chrom_poly(disjoint_union(a, b)), chrom_poly(a) * chrom_poly(b));
    }
}

TEST(Chromatic, AdditionIdentification) {
    Rng rng(74);
    const HypergraphSampler sample;
    std::uniform_int_distribution<std::uint64_t> bits;
    for (int i = 0; i < 50; ++i) {
        const Hypergraph h = sample(rng);
        VertexSet e(bits(rng) & h.vertices().bits());
        if (e.size() < 2) e = VertexSet{0, 1};
        EXPECT_EQ(chrom_poly(h), chrom_poly(add_edge(h, e)) + chrom_poly(identify(h, e)));
    }
}

TEST(Chromatic, ComponentFactorsDivide) {
    Rng rng(75);
    const HypergraphSampler sample{1, 7, 0, 5, 2, 3, false};
    for (int i = 0; i < 100; ++i) {
        const Hypergraph h = sample(rng);
        const IntPolynomial p = chrom_poly(h);
        const unsigned c = static_cast<unsigned>(components(h).size());
        const unsigned c_edge = edge_components(h);
        EXPECT_TRUE(divisible_by_power(p, Integer(0), c));
        EXPECT_TRUE(divisible_by_power(p, Integer(1), c_edge));
        if (h.size() > 0 && h.min_edge_size() < 2) continue;  // one-vertex samples clamp edges to size 1
        EXPECT_EQ(p.degree(), static_cast<int>(h.order()));
        EXPECT_EQ(p.coeff(h.order()), 1);
    }
}

TEST(Chromatic, CoefficientGap) {
    Rng rng(76);
    const HypergraphSampler sample{4, 7, 1, 5, 3, 5, true};
    for (int i = 0; i < 100; ++i) {
        const Hypergraph h = sample(rng);
        const unsigned n = h.order(), s = h.min_edge_size();
        const IntPolynomial p = chrom_poly(h);
        for (unsigned j = 1; j + 1 < s; ++j) EXPECT_EQ(p.coeff(n - j), 0);
        EXPECT_NE(p.coeff(n - s + 1), 0);
    }
}
