#include <gtest/gtest.h>

#include "gradua/gmod.hpp"
#include "oracle.hpp"
#include "random.hpp"

namespace gradua {
namespace {

struct Fixture {
  GRingPtr R = make_ring({"x", "y"}, {1, 1}, {});
  FreeModule F = R->free_module({0});
  ModuleVector v(const char* f) const { return R->to_vector(R->parse(f)); }
  SubquotientModule quotient(std::vector<const char*> rels) const {
    std::vector<ModuleVector> rs;
    for (auto r : rels) rs.push_back(v(r));
    return SubquotientModule(R, F, {F.basis(0)}, rs);
  }
};

TEST(Subquotient, HilbertFunctionOfCyclicModule) {
  Fixture f;
  SubquotientModule M = f.quotient({"x^2", "y^3"});
  EXPECT_EQ(hilbert_function(M, -1, 5), (std::vector<long>{0, 1, 2, 2, 1, 0, 0}));
  EXPECT_EQ(indeg(M), ExtendedInt(0));
  EXPECT_TRUE(is_zero(f.quotient({"x", "y", "1"})));
  EXPECT_EQ(indeg(zero_module(f.R)), ExtendedInt::infinity());
}

TEST(Subquotient, RejectsInhomogeneousGenerators) {
  Fixture f;
  EXPECT_THROW(SubquotientModule(f.R, f.F, {f.v("x + y^2")}, {}), AlgebraError);
}

TEST(Subquotient, TwistShiftsDegrees) {
  Fixture f;
  SubquotientModule M = f.quotient({"x", "y^2"});
  SubquotientModule M2 = twist(M, 3);
  EXPECT_EQ(indeg(M2), ExtendedInt(-3));
  EXPECT_EQ(piece_dimension(M2, -2), piece_dimension(M, 1));
}

TEST(Maps, KernelAndImageOfMultiplication) {
  Fixture f;
  FreeModule src = f.R->free_module({1});
  GradedMap mul = make_map(src, f.F, {{f.R->parse("x")}});
  SubquotientModule source = free_subquotient(f.R, {1});
  EXPECT_TRUE(is_zero(kernel(mul, source)));
  SubquotientModule im = image(mul, source);
  EXPECT_EQ(hilbert_function(im, 0, 3), (std::vector<long>{0, 1, 2, 3}));
  SubquotientModule ker = kernel(mul, source, {f.v("x*y")});
  EXPECT_EQ(min_gen_degrees(ker), (std::vector<int>{2}));
}

TEST(Maps, DegreeValidation) {
  Fixture f;
  FreeModule src = f.R->free_module({2});
  EXPECT_THROW(make_map(src, f.F, {{f.R->parse("x")}}), AlgebraError);
}

TEST(Maps, PreimageOfSubmodule) {
  Fixture f;
  FreeModule src = f.R->free_module({1});
  GradedMap mul = make_map(src, f.F, {{f.R->parse("x")}});
  SubquotientModule T(f.R, f.F, {f.v("x*y")}, {});
  SubquotientModule P = preimage(mul, T);
  EXPECT_EQ(min_gen_degrees(P), (std::vector<int>{2}));
}

TEST(Colon, AnnihilatorsAndTorsion) {
  Fixture f;
  SubquotientModule M = f.quotient({"x*y^3"});
  HomogeneousIdeal I(f.R, {f.R->parse("x^2")});
  SubquotientModule K = colon_ann(M, I);
  EXPECT_EQ(min_gen_degrees(K), (std::vector<int>{3}));
  SubquotientModule G = gamma(M, HomogeneousIdeal(f.R, {f.R->parse("x")}));
  EXPECT_EQ(min_gen_degrees(G), (std::vector<int>{3}));
  EXPECT_EQ(annihilator(M), HomogeneousIdeal(f.R, {f.R->parse("x*y^3")}));
}

TEST(Colon, GammaOfTorsionFreeModuleIsZero) {
  Fixture f;
  SubquotientModule M = free_subquotient(f.R, {0});
  EXPECT_TRUE(is_zero(gamma(M, HomogeneousIdeal(f.R, {f.R->parse("x")}))));
}

TEST(ModuleAlgebra, SumIntersectionAndQuotient) {
  Fixture f;
  SubquotientModule a(f.R, f.F, {f.v("x")}, {});
  SubquotientModule b(f.R, f.F, {f.v("y")}, {});
  SubquotientModule c = mod_combine(a, b, ModOp::kIntersection);
  EXPECT_TRUE(same_module(c, SubquotientModule(f.R, f.F, {f.v("x*y")}, {})));
  SubquotientModule s = mod_combine(a, b, ModOp::kSum);
  EXPECT_TRUE(is_submodule(a, s));
  EXPECT_FALSE(is_submodule(s, a));
  SubquotientModule q = quotient_by(s, a);
  EXPECT_EQ(hilbert_function(q, 0, 3), (std::vector<long>{0, 1, 1, 1}));
  EXPECT_THROW(quotient_by(a, s), AlgebraError);
}

TEST(ModuleAlgebra, DirectSumAddsHilbertFunctions) {
  Fixture f;
  SubquotientModule a = f.quotient({"x", "y^2"});
  SubquotientModule b = twist(f.quotient({"y"}), -1);
  SubquotientModule d = direct_sum(a, b);
  for (int n = -1; n <= 5; ++n) EXPECT_EQ(piece_dimension(d, n), piece_dimension(a, n) + piece_dimension(b, n));
}

TEST(ModuleAlgebra, MinimizeKeepsTheModule) {
  Fixture f;
  SubquotientModule M(f.R, f.F, {f.v("x"), f.v("x^2"), f.v("x*y")}, {});
  SubquotientModule m = minimize(M);
  EXPECT_EQ(m.gens().size(), 1u);
  EXPECT_TRUE(same_hilbert_function(M, m, -2, 6));
}

TEST(ModuleAlgebra, MultigradedDetection) {
  Fixture f;
  EXPECT_TRUE(is_multigraded(f.quotient({"x*y", "y^3"})));
  EXPECT_FALSE(is_multigraded(f.quotient({"x^2 - y^2"})));
}

TEST(Subquotient, HilbertFunctionsMatchOracle) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    auto R = testing::random_ring(rng, 3, Field::prime(101));
    SubquotientModule M = testing::random_monomial_module(rng, R);
    EXPECT_EQ(hilbert_function(M, -2, 6), oracle::hilbert_function(M, -2, 6)) << M.to_string();
  }
}

}  // namespace
}  // namespace gradua
