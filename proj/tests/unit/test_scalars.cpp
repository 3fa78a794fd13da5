#include <gtest/gtest.h>

#include "gradua/extended_int.hpp"
#include "gradua/scalars.hpp"

namespace gradua {
namespace {

TEST(Field, ParsesRationalsAndPrimes) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("Fp:101").characteristic(), 101u);
  EXPECT_EQ(Field::parse("ZZ/7"), Field::prime(7));
  EXPECT_EQ(Field::parse("Fp:101").to_string(), "Fp:101");
  EXPECT_EQ(Field::rationals().to_string(), "Q");
}

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(Field::prime(1), FieldError);
  EXPECT_THROW(Field::prime(91), FieldError);
  EXPECT_THROW(Field::parse("R"), FieldError);
  EXPECT_THROW(Field::parse("Fp:abc"), FieldError);
}

TEST(FieldElem, RationalArithmeticStaysCanonical) {
  Field Q = Field::rationals();
  FieldElem a = FieldElem::parse(Q, "2/4");
  FieldElem b(Q, 1);
  EXPECT_EQ(a + a, b);
  EXPECT_EQ(a.inverse(), FieldElem(Q, 2));
  EXPECT_EQ((a - b) * FieldElem(Q, -2), b);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(FieldElem, PrimeFieldArithmetic) {
  Field F = Field::prime(7);
  FieldElem three(F, 3);
  EXPECT_EQ(three * three.inverse(), FieldElem(F, 1));
  EXPECT_EQ(FieldElem(F, -1), FieldElem(F, 6));
  EXPECT_EQ(FieldElem(F, 10), three);
  EXPECT_EQ(FieldElem::parse(F, "1/2"), FieldElem(F, 4));
  EXPECT_THROW(FieldElem(F, 0).inverse(), FieldError);
}

TEST(FieldElem, MixingFieldsThrows) {
  FieldElem a(Field::prime(5), 1);
  FieldElem b(Field::prime(7), 1);
  EXPECT_THROW(a + b, FieldError);
}

TEST(ExtendedInt, InfinityIsLargest) {
  ExtendedInt inf;
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_LT(ExtendedInt(1000000), inf);
  EXPECT_LT(ExtendedInt(-3), ExtendedInt(2));
  EXPECT_EQ(minimum(inf, ExtendedInt(4)), ExtendedInt(4));
  EXPECT_EQ(inf.to_string(), "inf");
  EXPECT_EQ(ExtendedInt(-2).to_string(), "-2");
}

}  // namespace
}  // namespace gradua
