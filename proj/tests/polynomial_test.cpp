#include "polcovar/polynomial.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace polcovar {
namespace {

using testing::q;

const Polynomial kN{0, 1};

TEST(PolynomialTest, TrimsTrailingZeros) {
  Polynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(PolynomialTest, SubtractSelfIsZero) {
  Polynomial p{q(1, 3), -2, q(5, 7)};
  EXPECT_TRUE((p - p).is_zero());
}

TEST(PolynomialTest, Multiply) {
  Polynomial n_minus_1{-1, 1};
  EXPECT_EQ(kN * n_minus_1, Polynomial({0, -1, 1}));
  EXPECT_EQ(Polynomial({0, -1, 1}) * Polynomial({-2, 1}), Polynomial({0, 2, -3, 1}));
  EXPECT_TRUE((kN * Polynomial()).is_zero());
}

TEST(PolynomialTest, Scale) {
  EXPECT_EQ(Polynomial::monomial(1, 3).scaled(q(1, 48)), Polynomial::monomial(q(1, 48), 3));
  EXPECT_TRUE(Polynomial({1, 2, 3}).scaled(0).is_zero());
  EXPECT_EQ(Polynomial({0, -1, 1}).scaled(q(1, 8)), Polynomial({0, q(-1, 8), q(1, 8)}));
}

TEST(PolynomialTest, FallingFactorialExamples) {
  EXPECT_EQ(Polynomial::falling_factorial(0), Polynomial::constant(1));
  EXPECT_EQ(Polynomial::falling_factorial(2), Polynomial({0, -1, 1}));
  EXPECT_EQ(Polynomial::falling_factorial(4), Polynomial({0, -6, 11, -6, 1}));
  // 128 times the square-mean polynomial.
  Polynomial square_mean{0, q(-3, 64), q(11, 128), q(-3, 64), q(1, 128)};
  EXPECT_EQ(Polynomial::falling_factorial(4), square_mean.scaled(128));
}

TEST(PolynomialTest, FallingFactorialMatchesStirlingNumbers) {
  for (unsigned k = 0; k <= 16; ++k) {
    auto row = testing::stirling_first_kind_row(k);
    std::vector<Rational> coeffs(row.begin(), row.end());
    EXPECT_EQ(Polynomial::falling_factorial(k), Polynomial(coeffs)) << "k = " << k;
  }
}

TEST(PolynomialTest, FallingFactorialRoots) {
  for (unsigned k = 0; k <= 10; ++k) {
    auto ff = Polynomial::falling_factorial(k);
    EXPECT_EQ(ff.degree(), static_cast<int>(k));
    for (unsigned n = 0; n < k; ++n) EXPECT_TRUE(ff.evaluate(Rational(n)).is_zero());
    EXPECT_EQ(ff.evaluate(Rational(k)), Rational(factorial(k)));
  }
}

TEST(PolynomialTest, EvaluateExact) {
  EXPECT_TRUE(Polynomial({0, -1, 1}).evaluate(0).is_zero());
  Polynomial triangle_variance{0, q(-1, 96), q(1, 32), q(-11, 384), q(1, 128)};
  EXPECT_EQ(triangle_variance.evaluate(3), q(7, 64));
  EXPECT_EQ(Polynomial::falling_factorial(3).scaled(q(1, 8)).evaluate(3), q(3, 4));
}

TEST(PolynomialPropertyTest, RingAxioms) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testing::random_polynomial(rng);
    auto b = testing::random_polynomial(rng);
    auto c = testing::random_polynomial(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const Polynomial product = a * b;
    for (const auto& coeff : product.coefficients()) EXPECT_GT(coeff.denominator(), 0);
    if (!product.is_zero()) EXPECT_FALSE(product.coefficients().back().is_zero());
  }
}

TEST(PolynomialPropertyTest, EvaluationIsMultiplicative) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testing::random_polynomial(rng);
    auto b = testing::random_polynomial(rng);
    Rational n(testing::uniform_int(rng, -20, 20));
    EXPECT_EQ((a * b).evaluate(n), a.evaluate(n) * b.evaluate(n));
    EXPECT_EQ((a + b).evaluate(n), a.evaluate(n) + b.evaluate(n));
  }
}

}  // namespace
}  // namespace polcovar
