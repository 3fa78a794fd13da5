#include <gtest/gtest.h>

#include "gradua/gring.hpp"
#include "oracle.hpp"
#include "random.hpp"

namespace gradua {
namespace {

TEST(GradedRing, RelationsAreMinimalized) {
  auto R = make_ring({"x", "y"}, {1, 1}, {"x*y", "x^2*y", "x*y^2"});
  EXPECT_EQ(R->relations().size(), 1u);
  EXPECT_TRUE(R->is_monomial());
  EXPECT_TRUE(R->reduce(R->parse("x^2*y + y^3")) == R->parse("y^3"));
}

TEST(GradedRing, RejectsInhomogeneousRelations) {
  EXPECT_THROW(make_ring({"x", "y"}, {1, 1}, {"x^2 - y"}), AlgebraError);
}

TEST(GradedRing, WeightedRelationIsHomogeneous) {
  auto R = make_ring({"x", "y"}, {1, 2}, {"x^2 - y"});
  EXPECT_FALSE(R->is_monomial());
  EXPECT_EQ(R->relations().size(), 1u);
}

TEST(HomogeneousIdeal, MinimalGeneratorsSortedByDegree) {
  auto R = make_ring({"x", "y"}, {1, 1}, {});
  HomogeneousIdeal I(R, {R->parse("x^3"), R->parse("x*y"), R->parse("x^2*y")});
  EXPECT_EQ(I.min_gen_degrees(), (std::vector<int>{2, 3}));
  EXPECT_TRUE(I.contains(R->parse("x^2*y^5")));
  EXPECT_FALSE(I.contains(R->parse("y^5")));
}

TEST(HomogeneousIdeal, ModuloTheRingRelations) {
  auto R = make_ring({"x", "y"}, {1, 1}, {"x*y"});
  HomogeneousIdeal I(R, {R->parse("x*y"), R->parse("y")});
  EXPECT_EQ(I.gens().size(), 1u);
  EXPECT_TRUE(HomogeneousIdeal(R, {R->parse("x*y")}).is_zero());
  EXPECT_TRUE(HomogeneousIdeal::unit(R).is_unit());
}

TEST(HomogeneousIdeal, PowerAndProducts) {
  auto R = make_ring({"x", "y"}, {1, 1}, {});
  HomogeneousIdeal m(R, {R->parse("x"), R->parse("y")});
  HomogeneousIdeal m3 = ideal_power(m, 3);
  EXPECT_EQ(m3.gens().size(), 4u);
  EXPECT_EQ(ideal_combine(m, ideal_power(m, 2), IdealOp::kProduct), m3);
  EXPECT_EQ(ideal_power(m, 0), HomogeneousIdeal::unit(R));
}

TEST(HomogeneousIdeal, IntersectionOfMonomialIdeals) {
  auto R = make_ring({"x", "y"}, {1, 1}, {});
  HomogeneousIdeal a(R, {R->parse("x^2"), R->parse("y")});
  HomogeneousIdeal b(R, {R->parse("x")});
  HomogeneousIdeal c = ideal_combine(a, b, IdealOp::kIntersection);
  EXPECT_EQ(c, HomogeneousIdeal(R, {R->parse("x^2"), R->parse("x*y")}));
  EXPECT_EQ(ideal_combine(a, b, IdealOp::kSum), HomogeneousIdeal(R, {R->parse("x"), R->parse("y")}));
}

TEST(HomogeneousIdeal, QuotientDimensionsMatchOracle) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto R = testing::random_ring(rng, 3, Field::prime(101));
    HomogeneousIdeal I = testing::random_ideal(rng, R, 3, 3);
    SubquotientModule M = testing::cyclic_module(I);
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(piece_dimension(M, n), oracle::quotient_dimension(I, n)) << I.to_string() << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace gradua
