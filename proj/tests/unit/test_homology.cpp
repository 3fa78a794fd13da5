#include <gtest/gtest.h>

#include "gradua/homology.hpp"
#include "gradua/reference.hpp"
#include "random.hpp"

namespace gradua {
namespace {

HomogeneousIdeal maximal(const GRingPtr& R) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < R->num_vars(); ++i) vars.push_back(Polynomial::variable(R->poly_ptr(), i));
  return HomogeneousIdeal(R, vars);
}

TEST(Ext, LocalDualityForPolynomialRing) {
  auto R = make_ring({"x", "y"}, {1, 1}, {});
  SubquotientModule k = testing::cyclic_module(maximal(R));
  SubquotientModule S = free_subquotient(R, {0});
  EXPECT_TRUE(is_zero(ext(k, S, 0)));
  EXPECT_TRUE(is_zero(ext(k, S, 1)));
  SubquotientModule e2 = ext(k, S, 2);
  EXPECT_EQ(hilbert_function(e2, -3, 0), (std::vector<long>{0, 1, 0, 0}));
}

TEST(Tor, ResidueFieldBettiNumbers) {
  auto R = make_ring({"x", "y", "z"}, {1, 1, 1}, {});
  SubquotientModule k = testing::cyclic_module(maximal(R));
  std::vector<long> expect = {1, 3, 3, 1, 0};
  for (int i = 0; i <= 4; ++i) {
    SubquotientModule t = tor(k, k, i);
    EXPECT_EQ(piece_dimension(t, i), expect[i]) << "i=" << i;
  }
}

TEST(Ext, HomIntoModuleIsExtZero) {
  auto R = make_ring({"x", "y"}, {1, 1}, {});
  SubquotientModule L = testing::cyclic_module(HomogeneousIdeal(R, {R->parse("x")}));
  SubquotientModule M = testing::cyclic_module(HomogeneousIdeal(R, {R->parse("x^2")}));
  // Hom(R/(x), R/(x^2)) = (0 :_M x) = x·M ≅ (R/(x))(-1).
  SubquotientModule h = ext(L, M, 0);
  EXPECT_EQ(hilbert_function(h, 0, 4), (std::vector<long>{0, 1, 1, 1, 1}));
}

TEST(Tor, CrossRingValues) {
  CrossData d = cross_data(false);
  SubquotientModule t1 = tor(d.L, d.M, 1);
  EXPECT_TRUE(is_zero(t1));
  SubquotientModule t0 = tor(d.L, d.M, 0);
  EXPECT_TRUE(same_hilbert_function(t0, d.L, -2, 6));
}

TEST(ThreeTerm, HomologyMatchesExtOfQuotient) {
  CrossData d = cross_data(false);
  FreeResolution F = free_resolution(d.L, 4);
  for (int k = 0; k <= 3; ++k) {
    ThreeTermComplex T = ext_complex(F, d.M, d.N, k, d.I);
    for (int n = 1; n <= 4; ++n) {
      HomogeneousIdeal In = ideal_power(d.I, n);
      SubquotientModule X = quotient_by(d.M, ideal_times_module(In, d.N));
      EXPECT_TRUE(same_hilbert_function(complex_homology(T, n), ext(F, X, k), -10, 10)) << "k=" << k << " n=" << n;
    }
  }
}

TEST(ThreeTerm, ValidatesComposition) {
  auto R = make_ring({"x"}, {1}, {});
  SubquotientModule A = free_subquotient(R, {0});
  GradedMap phi = make_map(R->free_module({0}), R->free_module({-1}), {{R->parse("x")}});
  GradedMap psi = make_map(R->free_module({-1}), R->free_module({-2}), {{R->parse("x")}});
  EXPECT_THROW(make_three_term(A, free_subquotient(R, {-1}), free_subquotient(R, {-2}), phi, psi, {}, {}, {},
                               HomogeneousIdeal(R, {R->parse("x")})),
               AlgebraError);
}

TEST(ArtinRees, TrivialOffsets) {
  auto R = make_ring({"x", "y"}, {1, 1}, {});
  FreeModule F = R->free_module({0});
  HomogeneousIdeal m = maximal(R);
  SubquotientModule zero(R, F, {}, {});
  SubquotientModule y(R, F, {R->to_vector(R->parse("y"))}, {});
  EXPECT_EQ(artin_rees_estimate(zero, y, m, 4, 10).n0, 0);
  EXPECT_EQ(artin_rees_estimate(y, y, m, 4, 10).n0, 0);
}

TEST(ArtinRees, EstimateIsVerifiedByDirectComparison) {
  auto R = make_ring({"x", "y"}, {1, 1}, {});
  FreeModule F = R->free_module({0});
  HomogeneousIdeal m = maximal(R);
  SubquotientModule c(R, F, {R->to_vector(R->parse("y"))}, {});
  SubquotientModule im(R, F, {R->to_vector(R->parse("x"))}, {});
  ArtinReesEstimate e = artin_rees_estimate(c, im, m, 4, 10);
  EXPECT_EQ(e.verified_lo, e.n0 + 1);
  EXPECT_EQ(e.verified_hi, e.n0 + 4);
  for (int n = e.verified_lo; n <= e.verified_hi; ++n) {
    auto lhs = mod_combine(ideal_times_module(ideal_power(m, n), c), im, ModOp::kIntersection);
    auto inner = mod_combine(ideal_times_module(ideal_power(m, e.n0), c), im, ModOp::kIntersection);
    auto rhs = ideal_times_module(ideal_power(m, n - e.n0), inner);
    EXPECT_TRUE(same_module(lhs, rhs)) << "n=" << n;
  }
}

TEST(UVW, ReductionMatchesHomologyOnWindow) {
  CrossData d = cross_data(true);
  FreeResolution F = free_resolution(d.L, 4);
  for (int k = 0; k <= 2; ++k) {
    ThreeTermComplex T = tor_complex(F, d.M, d.N, k, d.I);
    UVWPackage P = uvw_extract(T, 10);
    for (int n = P.n0; n <= P.n0 + 4; ++n) {
      SubquotientModule lhs = complex_homology(T, n);
      SubquotientModule rhs = uvw_module(P.U, P.V, P.W, ideal_power(d.I, n - P.n0));
      EXPECT_TRUE(same_hilbert_function(lhs, rhs, -10, 10)) << "k=" << k << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace gradua
