#include <gtest/gtest.h>

#include "gradua/poly.hpp"

namespace gradua {
namespace {

RingPtr ring(std::vector<int> weights = {1, 1, 1}, Field field = Field::rationals()) {
  std::vector<std::string> names = {"x", "y", "z"};
  names.resize(weights.size());
  return std::make_shared<const PolyRing>(names, weights, field);
}

TEST(Polynomial, ParseAndPrintRoundTrip) {
  auto R = ring();
  Polynomial f = parse_polynomial(R, "x^2*y + 3*y^3 - 1/2*x*y*z");
  EXPECT_EQ(parse_polynomial(R, f.to_string()), f);
  EXPECT_EQ(f.size(), 3u);
}

TEST(Polynomial, ParsesParenthesesAndPowers) {
  auto R = ring();
  Polynomial f = parse_polynomial(R, "(x + y)^2");
  EXPECT_EQ(f, parse_polynomial(R, "x^2 + 2*x*y + y^2"));
  EXPECT_TRUE(parse_polynomial(R, "x - x").is_zero());
}

TEST(Polynomial, ParseErrors) {
  auto R = ring();
  EXPECT_THROW(parse_polynomial(R, "x +"), ParseError);
  EXPECT_THROW(parse_polynomial(R, "w"), ParseError);
  EXPECT_THROW(parse_polynomial(R, "(x"), ParseError);
}

TEST(Polynomial, ArithmeticIdentities) {
  auto R = ring();
  Polynomial a = parse_polynomial(R, "x + y");
  Polynomial b = parse_polynomial(R, "x - y");
  EXPECT_EQ(a * b, parse_polynomial(R, "x^2 - y^2"));
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ(a - a, Polynomial(R));
  EXPECT_EQ(-(-a), a);
}

TEST(Polynomial, WeightedDegree) {
  auto R = ring({1, 2, 3});
  Polynomial f = parse_polynomial(R, "x^3 + x*y + z");
  ASSERT_TRUE(f.is_homogeneous());
  EXPECT_EQ(f.degree(), 3);
  EXPECT_FALSE(parse_polynomial(R, "x + y").is_homogeneous());
  EXPECT_EQ(parse_polynomial(R, "x + y").degree(), std::nullopt);
}

TEST(Monomials, CountsMatchStarsAndBars) {
  auto R = ring();
  EXPECT_EQ(R->monomials_of_degree(0).size(), 1u);
  EXPECT_EQ(R->monomials_of_degree(2).size(), 6u);
  EXPECT_EQ(R->monomials_of_degree(4).size(), 15u);
  EXPECT_TRUE(R->monomials_of_degree(-1).empty());
}

TEST(Monomials, DescendingInTheRingOrder) {
  auto R = ring();
  auto ms = R->monomials_of_degree(3);
  for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_GT(R->compare(ms[i - 1], ms[i]), 0);
}

TEST(Monomials, GRevLexTieBreak) {
  auto R = ring();
  Monomial xz = parse_polynomial(R, "x*z").leading_term().mono;
  Monomial y2 = parse_polynomial(R, "y^2").leading_term().mono;
  EXPECT_GT(R->compare(y2, xz), 0);
}

TEST(Polynomial, FiniteFieldCoefficientsReduce) {
  auto R = ring({1, 1}, Field::prime(3));
  EXPECT_TRUE(parse_polynomial(R, "3*x").is_zero());
  EXPECT_EQ(parse_polynomial(R, "4*x + y"), parse_polynomial(R, "x + y"));
}

}  // namespace
}  // namespace gradua
