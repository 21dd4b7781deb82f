#include "polcovar/rational.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "test_support.hpp"

namespace polcovar {
namespace {

using testing::q;

void ExpectCanonical(const Rational& r) {
  EXPECT_GT(r.denominator(), 0);
  EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()), r.denominator()), 1)
      << r;
  if (r.is_zero()) EXPECT_EQ(r.denominator(), 1);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_EQ(q(-2, 3) * q(3, 4), q(-1, 2));
  EXPECT_EQ(q(1, 128) / q(1, 128), Rational(1));
  EXPECT_EQ(q(1, 2) - q(1, 2), Rational());
}

TEST(RationalTest, ConstructorCanonicalizes) {
  Rational r(BigInt(6), BigInt(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  Rational zero(BigInt(0), BigInt(-17));
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(q(1, 2) / Rational(), std::domain_error);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-11/384"), q(-11, 384));
  EXPECT_EQ(Rational::parse("10/4").to_string(), "5/2");
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
}

TEST(RationalTest, Ordering) {
  EXPECT_LT(q(1, 3), q(1, 2));
  EXPECT_GT(q(-1, 3), q(-1, 2));
  EXPECT_EQ(q(2, 4) <=> q(1, 2), std::strong_ordering::equal);
}

TEST(RationalTest, LargeValuesStayExact) {
  // 30! / 2^100 then back again.
  Rational big(factorial(30));
  Rational r = big * inverse_power_of_two(100);
  EXPECT_EQ(r / inverse_power_of_two(100), big);
  ExpectCanonical(r);
}

TEST(RationalPropertyTest, CanonicalFormUnderAllOperations) {
  testing::Rng rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = testing::random_rational(rng);
    Rational b = testing::random_rational(rng);
    ExpectCanonical(a + b);
    ExpectCanonical(a - b);
    ExpectCanonical(a * b);
    ExpectCanonical(-a);
    if (!b.is_zero()) {
      ExpectCanonical(a / b);
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a - b) + b, a);
  }
}

}  // namespace
}  // namespace polcovar
