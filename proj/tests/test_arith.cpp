#include <gtest/gtest.h>

#include "lowdeg/arith.hpp"
#include "lowdeg/errors.hpp"

namespace lowdeg {
namespace {

TEST(Arith, CeilAndFloorRoundTowardInfinities) {
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(6, 3)), 2);
  EXPECT_EQ(floor(Rational(-6, 3)), -2);
  EXPECT_EQ(ceil(Rational(100, 9)), 12);
}

TEST(Arith, RendersLowestTerms) {
  EXPECT_EQ(to_string(Rational(8, 18)), "4/9");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(Integer("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(Arith, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_integer("-42"), -42);
  EXPECT_EQ(parse_integer(" 17 "), 17);
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-5"), Rational(-5));
}

TEST(Arith, RejectsMalformedNumbers) {
  EXPECT_THROW(parse_integer(""), InputError);
  EXPECT_THROW(parse_integer("12x"), InputError);
  EXPECT_THROW(parse_integer("3/2"), InputError);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("a/b"), InputError);
}

TEST(Arith, ToLongChecksRange) {
  EXPECT_EQ(to_long(Integer(-9)), -9);
  EXPECT_THROW(to_long(Integer("99999999999999999999999")), InputError);
}

}  // namespace
}  // namespace lowdeg
