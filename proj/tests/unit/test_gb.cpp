#include <gtest/gtest.h>

#include "gradua/gb.hpp"

namespace gradua {
namespace {

RingPtr qxy() {
  return std::make_shared<const PolyRing>(std::vector<std::string>{"x", "y"},
                                          std::vector<int>{1, 1}, Field::rationals());
}

ModuleVector vec(const FreeModule& F, std::vector<Polynomial> comps) {
  return F.from_components(comps);
}

TEST(Groebner, MonomialIdealIsItsOwnBasis) {
  auto R = qxy();
  FreeModule F(R, {0});
  std::vector<ModuleVector> gens = {vec(F, {parse_polynomial(R, "x^2")}),
                                    vec(F, {parse_polynomial(R, "x*y")})};
  auto G = groebner(F, gens);
  EXPECT_EQ(G.size(), 2u);
  EXPECT_TRUE(satisfies_buchberger_criterion(G));
}

TEST(Groebner, BuchbergerStepProducesCube) {
  auto R = qxy();
  FreeModule F(R, {0});
  std::vector<ModuleVector> gens = {vec(F, {parse_polynomial(R, "x*y")}),
                                    vec(F, {parse_polynomial(R, "x^2 - y^2")})};
  auto G = groebner(F, gens);
  ModuleVector y3 = vec(F, {parse_polynomial(R, "y^3")});
  bool found = false;
  for (const auto& g : G.elements()) found = found || g == y3;
  EXPECT_TRUE(found);
  EXPECT_TRUE(satisfies_buchberger_criterion(G));
  auto nf = G.normal_form(vec(F, {parse_polynomial(R, "x^2 + y^2")}));
  EXPECT_EQ(nf, vec(F, {parse_polynomial(R, "2*y^2")}));
  EXPECT_EQ(G.normal_form(nf), nf);
}

TEST(Groebner, ZeroGeneratorsGiveEmptyBasis) {
  auto R = qxy();
  FreeModule F(R, {0});
  std::vector<ModuleVector> gens = {F.zero()};
  EXPECT_TRUE(groebner(F, gens).empty());
}

TEST(Groebner, Membership) {
  auto R = qxy();
  FreeModule F(R, {0});
  std::vector<ModuleVector> xy = {vec(F, {parse_polynomial(R, "x*y")})};
  EXPECT_TRUE(member(F, vec(F, {parse_polynomial(R, "x^3*y")}), xy));
  std::vector<ModuleVector> gens = {vec(F, {parse_polynomial(R, "x^2")}),
                                    vec(F, {parse_polynomial(R, "x*y")})};
  EXPECT_FALSE(member(F, vec(F, {parse_polynomial(R, "x")}), gens));
  EXPECT_TRUE(member(F, F.zero(), gens));
}

TEST(Syzygies, Koszul) {
  auto R = qxy();
  FreeModule F(R, {0});
  std::vector<ModuleVector> gens = {vec(F, {parse_polynomial(R, "x")}),
                                    vec(F, {parse_polynomial(R, "y")})};
  FreeModule T;
  auto syz = syzygies(F, gens, &T);
  ASSERT_EQ(syz.size(), 1u);
  auto c = T.components(syz[0]);
  EXPECT_TRUE((c[0] == parse_polynomial(R, "y") && c[1] == parse_polynomial(R, "-x")) ||
              (c[0] == parse_polynomial(R, "-y") && c[1] == parse_polynomial(R, "x")));
}

TEST(Syzygies, DomainHasNone) {
  auto R = qxy();
  FreeModule F(R, {0});
  std::vector<ModuleVector> gens = {vec(F, {parse_polynomial(R, "x")})};
  EXPECT_TRUE(syzygies(F, gens).empty());
}

TEST(Syzygies, SharedFactor) {
  auto R = qxy();
  FreeModule F(R, {0});
  std::vector<ModuleVector> gens = {vec(F, {parse_polynomial(R, "x*y")}),
                                    vec(F, {parse_polynomial(R, "y^2")})};
  FreeModule T;
  auto syz = syzygies(F, gens, &T);
  ASSERT_EQ(syz.size(), 1u);
  auto c = T.components(syz[0]);
  EXPECT_EQ(T.degree(syz[0]), 3);
  Polynomial total = c[0] * parse_polynomial(R, "x*y") + c[1] * parse_polynomial(R, "y^2");
  EXPECT_TRUE(total.is_zero());
  EXPECT_EQ(c[0].degree(), 1);
}

TEST(Groebner, ModuleBasisSatisfiesCriterion) {
  auto R = qxy();
  FreeModule F(R, {0, 1});
  std::vector<ModuleVector> gens = {
      vec(F, {parse_polynomial(R, "x^2"), parse_polynomial(R, "y")}),
      vec(F, {parse_polynomial(R, "x*y"), parse_polynomial(R, "x")}),
      vec(F, {parse_polynomial(R, "y^2"), parse_polynomial(R, "x - y")})};
  auto G = groebner(F, gens);
  EXPECT_TRUE(satisfies_buchberger_criterion(G));
  for (const auto& g : gens) EXPECT_TRUE(G.contains(g));
}

}  // namespace
}  // namespace gradua
