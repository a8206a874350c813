#include "recov/rational.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <unordered_set>

namespace recov {
namespace {

TEST(RationalParse, DecimalsAreExact) {
  EXPECT_EQ(Rational::parse("0.95"), Rational(19, 20));
  EXPECT_EQ(Rational::parse("1"), Rational(1));
  EXPECT_EQ(Rational::parse("0.025"), Rational(1, 40));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("12.50"), Rational(25, 2));
}

TEST(RationalParse, Fractions) {
  EXPECT_EQ(Rational::parse("3/40"), Rational(3, 40));
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
}

TEST(RationalParse, RejectsMalformed) {
  for (const char* bad : {"", "-1", "1e3", "abc", "1.", ".", "1..2", "1/", "/2", " 1", "0x10", "1.2/3"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(RationalParse, RejectsOversized) {
  EXPECT_THROW(Rational::parse("0.1234567890123456789"), std::overflow_error);
  EXPECT_THROW(Rational::parse("99999999999999999999"), std::overflow_error);
}

TEST(RationalFormat, TerminatingDecimals) {
  EXPECT_EQ(Rational(19, 20).to_string(), "0.95");
  EXPECT_EQ(Rational(1, 40).to_string(), "0.025");
  EXPECT_EQ(Rational(4).to_string(), "4");
  EXPECT_EQ(Rational(0).to_string(), "0");
  EXPECT_EQ(Rational(-1, 10).to_string(), "-0.1");
  EXPECT_EQ(Rational(-5, 2).to_string(), "-2.5");
  EXPECT_EQ(Rational(109, 200).to_string(), "0.545");
}

TEST(RationalFormat, RepeatingUsesFraction) {
  EXPECT_EQ(Rational(1, 3).to_string(), "1/3");
  EXPECT_EQ(Rational(-7, 6).to_string(), "-7/6");
}

TEST(RationalFormat, RoundTrips) {
  for (auto r : {Rational(19, 20), Rational(1, 3), Rational(123456789, 1024), Rational(7), Rational(1, 1 << 20)})
    EXPECT_EQ(Rational::parse(r.to_string()), r) << r;
}

TEST(RationalArithmetic, Basics) {
  Rational a(1, 2), b(1, 3);
  EXPECT_EQ(a + b, Rational(5, 6));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 6));
  EXPECT_EQ(a / b, Rational(3, 2));
  EXPECT_EQ(-a, Rational(-1, 2));
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalArithmetic, NoFloatingDrift) {
  Rational v = Rational::parse("0.99");
  Rational step = Rational::parse("0.01");
  for (int i = 0; i < 99; ++i) v -= step;
  EXPECT_EQ(v, Rational(0));
}

TEST(RationalArithmetic, OverflowThrows) {
  Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rational(1), std::overflow_error);
  EXPECT_THROW(Rational(1, 4000000000) * Rational(1, 4000000000), std::overflow_error);
}

TEST(RationalOrder, ComparesExactly) {
  EXPECT_LT(Rational(1, 3), Rational(34, 100));
  EXPECT_GT(Rational(-1, 3), Rational(-34, 100));
  EXPECT_EQ(Rational(2, 6), Rational(1, 3));
  EXPECT_EQ(min(Rational(1), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(max(Rational(1), Rational(1, 2)), Rational(1));
}

TEST(RationalRounding, FloorCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(3).ceil(), 3);
  EXPECT_EQ(ceil_div(Rational::parse("0.64"), Rational::parse("0.025")), 26);
  EXPECT_EQ(floor_div(Rational::parse("0.7"), Rational::parse("0.6")), 1);
  EXPECT_THROW(ceil_div(Rational(1), Rational(0)), std::domain_error);
}

TEST(RationalHash, EqualValuesHashEqual) {
  std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4), Rational(3, 6)};
  EXPECT_EQ(set.size(), 1u);
}

}  // namespace
}  // namespace recov
