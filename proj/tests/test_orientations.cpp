#include <gtest/gtest.h>

#include "hypchrom/chromatic.hpp"
#include "hypchrom/constructions.hpp"
#include "hypchrom/enumerate.hpp"
#include "hypchrom/orientations.hpp"
#include "hypchrom/tutte.hpp"
#include "oracles.hpp"

using namespace hypchrom;

namespace {

Integer abs_at_minus_one(const IntPolynomial& p) {
    Integer v = eval_integer(p, Integer(-1));
    return v < 0 ? Integer(-v) : v;
}

void check_against_evaluations(const Multigraph& g) {
    SCOPED_TRACE(format_multigraph(g));
    const Integer acyclic = count_acyclic(g), cyclic = count_totally_cyclic(g);
    const BivarLaurent t = tutte_dc(g);
    EXPECT_EQ(Rational(acyclic), tutte_eval(t, Rational(2), Rational(0)));
    EXPECT_EQ(Rational(cyclic), tutte_eval(t, Rational(0), Rational(2)));
    EXPECT_EQ(acyclic, abs_at_minus_one(chrom_poly(as_hypergraph(g))));
    EXPECT_EQ(cyclic, abs_at_minus_one(chrom_poly(h_edge(g))));
    const auto brute = oracle::orientation_counts(g);
    EXPECT_EQ(acyclic, brute.acyclic);
    EXPECT_EQ(cyclic, brute.totally_cyclic);
}

}  // namespace

TEST(Orientations, AcyclicExamples) {
    EXPECT_EQ(count_acyclic(cycle_multigraph(3)), 6);
    EXPECT_EQ(count_acyclic(Multigraph(2, {{0, 1}})), 2);
    EXPECT_EQ(count_acyclic(Multigraph(1, {{0, 0}})), 0);
    EXPECT_EQ(count_acyclic(Multigraph(3)), 1);
}

TEST(Orientations, TotallyCyclicExamples) {
    EXPECT_EQ(count_totally_cyclic(double_edge()), 2);
    EXPECT_EQ(count_totally_cyclic(cycle_multigraph(3)), 2);
    EXPECT_EQ(count_totally_cyclic(Multigraph(4, {{0, 1}, {1, 2}, {1, 3}})), 0);
    EXPECT_EQ(count_totally_cyclic(Multigraph(1, {{0, 0}})), 2);
}

TEST(Orientations, Predicates) {
    const Multigraph c3 = cycle_multigraph(3);
    EXPECT_FALSE(is_acyclic(c3, Orientation{0}));
    EXPECT_TRUE(is_totally_cyclic(c3, Orientation{0}));
    EXPECT_TRUE(is_acyclic(c3, Orientation{1}));
    EXPECT_FALSE(is_totally_cyclic(c3, Orientation{1}));
    EXPECT_FALSE(is_acyclic(Multigraph(1, {{0, 0}}), Orientation{1}));
}

TEST(Orientations, Cutoff) {
    std::vector<EdgeEnds> edges(21, EdgeEnds{0, 1});
    EXPECT_THROW(count_acyclic(Multigraph(2, edges)), std::invalid_argument);
}

TEST(Orientations, ExhaustiveSmallMultigraphs) {
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 0; m <= 6; ++m) {
            for_each_multigraph(n, m, EdgeOrder::multiset, check_against_evaluations);
        }
    }
}

TEST(Orientations, RandomLargerMultigraphs) {
    Rng rng(81);
    std::uniform_int_distribution<unsigned> order(2, 6), size(7, 10);
    for (int i = 0; i < 100; ++i) check_against_evaluations(random_multigraph(rng, order(rng), size(rng)));
}

TEST(Orientations, CountsAreBoundedByAllOrientations) {
    Rng rng(82);
    std::uniform_int_distribution<unsigned> order(1, 5), size(1, 8);
    for (int i = 0; i < 200; ++i) {
        const Multigraph g = random_multigraph(rng, order(rng), size(rng));
        const Integer total = Integer(1) << static_cast<unsigned>(g.size());
        EXPECT_LE(count_acyclic(g) + count_totally_cyclic(g), total);
    }
    // with no edges the single orientation is both acyclic and vacuously totally cyclic
    EXPECT_EQ(count_acyclic(Multigraph(2)) + count_totally_cyclic(Multigraph(2)), 2);
}
