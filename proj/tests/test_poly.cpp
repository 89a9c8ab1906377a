#include <gtest/gtest.h>

#include <random>

#include "hypchrom/parse_error.hpp"
#include "hypchrom/poly.hpp"

using namespace hypchrom;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9);
    std::vector<Integer> c(deg(rng) + 1);
    for (auto& x : c) x = coef(rng);
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST(Poly, ConstructionTrimsTrailingZeros) {
    IntPolynomial p{1, 2, 0, 0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(IntPolynomial{}.degree(), -1);
    EXPECT_TRUE((IntPolynomial{0, 0}).is_zero());
}

TEST(Poly, Arithmetic) {
    const IntPolynomial a = IntPolynomial::linear(1);   // x - 1
    const IntPolynomial b = IntPolynomial::linear(-1);  // x + 1
    EXPECT_EQ(a * b, (IntPolynomial{-1, 0, 1}));
    EXPECT_EQ(a + b, (IntPolynomial{0, 2}));
    EXPECT_EQ(a - a, IntPolynomial{});
    EXPECT_EQ(-a, (IntPolynomial{1, -1}));
    EXPECT_EQ(a * Integer(3), (IntPolynomial{-3, 3}));
    EXPECT_EQ(pow(a, 3), (IntPolynomial{-1, 3, -3, 1}));
    EXPECT_EQ(pow(a, 0), IntPolynomial::constant(1));
}

TEST(Poly, FallingFactorial) {
    EXPECT_EQ(falling_factorial(0), IntPolynomial::constant(1));
    EXPECT_EQ(falling_factorial(3), (IntPolynomial{0, 2, -3, 1}));
}

TEST(Poly, ShiftAndEval) {
    const IntPolynomial p{0, 1, -2, 0, 1};
    EXPECT_EQ(shift(p, Integer(0)), p);
    EXPECT_EQ(shift(IntPolynomial{0, 0, 1}, Integer(-1)), (IntPolynomial{1, -2, 1}));
    EXPECT_EQ(eval(p, Rational(2)), Rational(10));
    EXPECT_EQ(eval_integer(p, Integer(-1)), Integer(-2));
    EXPECT_EQ(eval(p, Rational(1, 2)), Rational(1, 16));
}

TEST(Poly, EvaluationIsMultiplicative) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 7);
    for (int i = 0; i < 20; ++i) {
        const IntPolynomial p = random_poly(rng, 6), q = random_poly(rng, 6);
        const Rational at(num(rng), den(rng));
        EXPECT_EQ(eval(p * q, at), eval(p, at) * eval(q, at));
        EXPECT_EQ(eval(p + q, at), eval(p, at) + eval(q, at));
    }
}

TEST(Poly, ShiftRoundTrip) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 50; ++i) {
        const IntPolynomial p = random_poly(rng, 8);
        const Integer k = c(rng);
        EXPECT_EQ(shift(shift(p, k), Integer(-k)), p);
        EXPECT_EQ(eval(shift(p, k), Rational(3)), eval(p, Rational(3 + k.get_si())));
    }
}

TEST(Poly, RootMultiplicity) {
    // x (x-1)^2 (x+2)
    const IntPolynomial p = IntPolynomial{0, 1} * pow(IntPolynomial::linear(1), 2) * IntPolynomial::linear(-2);
    EXPECT_EQ(root_multiplicity(p, Integer(1)), 2U);
    EXPECT_EQ(root_multiplicity(p, Integer(0)), 1U);
    EXPECT_EQ(root_multiplicity(p, Integer(-2)), 1U);
    EXPECT_EQ(root_multiplicity(p, Integer(3)), 0U);
    EXPECT_THROW(root_multiplicity(IntPolynomial{}, Integer(0)), std::domain_error);
    EXPECT_TRUE(divisible_by_power(p, Integer(1), 2));
    EXPECT_FALSE(divisible_by_power(p, Integer(1), 3));
    EXPECT_TRUE(divisible_by_power(IntPolynomial{}, Integer(5), 9));
}

TEST(Poly, SyntheticAndExactDivision) {
    Integer rem;
    const IntPolynomial q = synthetic_divide(IntPolynomial{-1, 0, 1}, Integer(1), rem);
    EXPECT_EQ(q, (IntPolynomial{1, 1}));
    EXPECT_EQ(rem, 0);
    synthetic_divide(IntPolynomial{1, 0, 1}, Integer(1), rem);
    EXPECT_EQ(rem, 2);
    EXPECT_EQ(divide_exact(IntPolynomial{-1, 0, 1}, IntPolynomial::linear(-1)), IntPolynomial::linear(1));
    EXPECT_THROW(divide_exact(IntPolynomial{1, 0, 1}, IntPolynomial::linear(1)), std::logic_error);
}

TEST(Poly, ApexTransform) {
    // independence polynomial of K3 is 1 + 3x
    const std::vector<Integer> k3{1, 3};
    EXPECT_EQ(apex_transform(k3, 3), (IntPolynomial{0, 2, -3, 0, 1}));
    // single vertex: 1 + x
    const std::vector<Integer> k1{1, 1};
    EXPECT_EQ(apex_transform(k1, 1), (IntPolynomial{0, 0, 1}));
    // K2: 1 + 2x gives x(x-1)(x+1)
    const std::vector<Integer> k2{1, 2};
    EXPECT_EQ(apex_transform(k2, 2), (IntPolynomial{0, -1, 0, 1}));
    const std::vector<Integer> too_big{1, 1, 1};
    EXPECT_THROW(apex_transform(too_big, 1), std::invalid_argument);
}

TEST(Poly, TextRoundTrip) {
    const IntPolynomial p{0, 1, -2, 0, 1};
    EXPECT_EQ(format_poly(p), "poly 4 0 1 -2 0 1");
    EXPECT_EQ(parse_poly("poly 4 0 1 -2 0 1"), p);
    EXPECT_EQ(format_poly(IntPolynomial{}), "poly -1");
    EXPECT_EQ(parse_poly("poly -1"), IntPolynomial{});
    EXPECT_EQ(p.to_string(), "x^4 - 2x^2 + x");
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        const IntPolynomial q = random_poly(rng, 7);
        EXPECT_EQ(parse_poly(format_poly(q)), q);
    }
}

TEST(Poly, ParseErrors) {
    EXPECT_THROW(parse_poly("poly 2 1 2"), ParseError);
    EXPECT_THROW(parse_poly("pol 1 1 1"), ParseError);
    EXPECT_THROW(parse_poly("poly 1 1 0"), ParseError);
    try {
        parse_poly("c comment\npoly 1 1 x\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_EQ(e.column(), 10U);
    }
}

TEST(Poly, IsIntegral) {
    EXPECT_TRUE(is_integral(Rational(4, 2)));
    EXPECT_FALSE(is_integral(Rational(1, 2)));
}
