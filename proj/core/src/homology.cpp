#include "gradua/homology.hpp"

#include <map>

namespace gradua {

namespace {

FreeModule blocks(const FreeModule& F, const SubquotientModule& M, int sign) {
  std::vector<int> tw;
  for (int i = 0; i < F.rank(); ++i) {
    for (int l = 0; l < M.ambient().rank(); ++l) tw.push_back(M.ambient().twist(l) - sign * F.twist(i));
  }
  return FreeModule(M.ambient().ring_ptr(), std::move(tw));
}

std::vector<ModuleVector> in_blocks(const FreeModule& big, int count, std::uint32_t rank,
                                    const std::vector<ModuleVector>& vs) {
  std::vector<ModuleVector> out;
  for (int i = 0; i < count; ++i) {
    for (const auto& v : vs) {
      std::vector<VTerm> terms = v.terms;
      for (auto& t : terms) t.pos += static_cast<std::uint32_t>(i) * rank;
      out.push_back(big.normalize(std::move(terms)));
    }
  }
  return out;
}

SubquotientModule block_term(const FreeModule& F, const SubquotientModule& M, int sign) {
  FreeModule big = blocks(F, M, sign);
  const auto r = static_cast<std::uint32_t>(M.ambient().rank());
  return SubquotientModule(M.ring_ptr(), big, in_blocks(big, F.rank(), r, M.gens()),
                           in_blocks(big, F.rank(), r, M.rels()));
}

// For d : F' -> F, builds the map between block modules sending block
// `from` to the sum of D-multiples of block `to`.
GradedMap block_map(const GradedMap& d, const SubquotientModule& M, bool dual) {
  const auto r = static_cast<std::uint32_t>(M.ambient().rank());
  FreeModule src = dual ? blocks(d.target, M, 1) : blocks(d.source, M, -1);
  FreeModule tgt = dual ? blocks(d.source, M, 1) : blocks(d.target, M, -1);
  std::vector<std::vector<VTerm>> cols(src.rank());
  for (std::size_t s = 0; s < d.images.size(); ++s) {
    for (const auto& t : d.images[s].terms) {
      // entry D_{is} with i = t.pos
      std::uint32_t from = dual ? t.pos : static_cast<std::uint32_t>(s);
      std::uint32_t to = dual ? static_cast<std::uint32_t>(s) : t.pos;
      for (std::uint32_t l = 0; l < r; ++l) cols[from * r + l].push_back({t.mono, to * r + l, t.coeff});
    }
  }
  GradedMap f{src, tgt, {}};
  for (auto& c : cols) f.images.push_back(tgt.normalize(std::move(c)));
  return f;
}

SubquotientModule with_gens(const SubquotientModule& M, std::vector<ModuleVector> gens,
                            std::vector<ModuleVector> extra_rels) {
  auto rels = M.rels();
  rels.insert(rels.end(), extra_rels.begin(), extra_rels.end());
  return SubquotientModule(M.ring_ptr(), M.ambient(), std::move(gens), std::move(rels));
}

void check_contained(const FreeModule& F, const std::vector<ModuleVector>& vs,
                     const std::vector<ModuleVector>& span, const char* what) {
  GroebnerBasis G = groebner(F, span);
  for (const auto& v : vs) {
    if (!G.contains(v)) throw AlgebraError(std::string("three-term complex: ") + what);
  }
}

std::vector<ModuleVector> concat(std::vector<ModuleVector> a, const std::vector<ModuleVector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

SubquotientModule hom_term(const FreeModule& F, const SubquotientModule& M) { return block_term(F, M, 1); }

SubquotientModule tensor_term(const FreeModule& F, const SubquotientModule& M) { return block_term(F, M, -1); }

std::vector<ModuleVector> hom_sub(const FreeModule& F, const SubquotientModule& M,
                                  const std::vector<ModuleVector>& n_gens) {
  return in_blocks(blocks(F, M, 1), F.rank(), static_cast<std::uint32_t>(M.ambient().rank()), n_gens);
}

std::vector<ModuleVector> tensor_sub(const FreeModule& F, const SubquotientModule& M,
                                     const std::vector<ModuleVector>& n_gens) {
  return in_blocks(blocks(F, M, -1), F.rank(), static_cast<std::uint32_t>(M.ambient().rank()), n_gens);
}

GradedMap hom_map(const GradedMap& d, const SubquotientModule& M) { return block_map(d, M, true); }

GradedMap tensor_map(const GradedMap& d, const SubquotientModule& M) { return block_map(d, M, false); }

SubquotientModule ext(const FreeResolution& F, const SubquotientModule& M, int k) {
  SubquotientModule B = hom_term(F.module_at(k), M);
  if (B.ambient().rank() == 0) return B;
  SubquotientModule C = hom_term(F.module_at(k + 1), M);
  SubquotientModule ker = kernel(hom_map(F.map_at(k), M), B, C.rels());
  std::vector<ModuleVector> im;
  if (k >= 1) {
    SubquotientModule A = hom_term(F.module_at(k - 1), M);
    im = hom_map(F.map_at(k - 1), M).apply(A.gens());
  }
  return with_gens(B, ker.gens(), std::move(im));
}

SubquotientModule ext(const SubquotientModule& L, const SubquotientModule& M, int k) {
  return ext(free_resolution(L, k + 1, true), M, k);
}

SubquotientModule tor(const FreeResolution& F, const SubquotientModule& M, int k) {
  SubquotientModule B = tensor_term(F.module_at(k), M);
  if (B.ambient().rank() == 0) return B;
  std::vector<ModuleVector> num = B.gens();
  if (k >= 1) {
    SubquotientModule C = tensor_term(F.module_at(k - 1), M);
    num = kernel(tensor_map(F.map_at(k - 1), M), B, C.rels()).gens();
  }
  SubquotientModule D = tensor_term(F.module_at(k + 1), M);
  return with_gens(B, std::move(num), tensor_map(F.map_at(k), M).apply(D.gens()));
}

SubquotientModule tor(const SubquotientModule& L, const SubquotientModule& M, int k) {
  return tor(free_resolution(L, k + 1, true), M, k);
}

ThreeTermComplex make_three_term(SubquotientModule A, SubquotientModule B, SubquotientModule C,
                                 GradedMap phi, GradedMap psi, std::vector<ModuleVector> A_sub,
                                 std::vector<ModuleVector> B_sub, std::vector<ModuleVector> C_sub,
                                 HomogeneousIdeal I) {
  if (!(phi.source == A.ambient()) || !(phi.target == B.ambient()) || !(psi.source == B.ambient()) ||
      !(psi.target == C.ambient())) {
    throw AlgebraError("three-term complex: maps do not match the terms");
  }
  check_contained(C.ambient(), psi.apply(phi.apply(A.gens())), C.rels(), "composite map is not zero");
  check_contained(B.ambient(), phi.apply(A_sub), concat(B_sub, B.rels()), "phi(A') is not inside B'");
  check_contained(C.ambient(), psi.apply(B_sub), concat(C_sub, C.rels()), "psi(B') is not inside C'");
  return ThreeTermComplex{std::move(A),     std::move(B),     std::move(C),     std::move(phi), std::move(psi),
                          std::move(A_sub), std::move(B_sub), std::move(C_sub), std::move(I)};
}

ThreeTermComplex ext_complex(const FreeResolution& F, const SubquotientModule& M, const SubquotientModule& N,
                             int k, const HomogeneousIdeal& I) {
  FreeModule Fa = F.module_at(k - 1);
  FreeModule Fb = F.module_at(k);
  FreeModule Fc = F.module_at(k + 1);
  return make_three_term(hom_term(Fa, M), hom_term(Fb, M), hom_term(Fc, M), hom_map(F.map_at(k - 1), M),
                         hom_map(F.map_at(k), M), hom_sub(Fa, M, N.gens()), hom_sub(Fb, M, N.gens()),
                         hom_sub(Fc, M, N.gens()), I);
}

ThreeTermComplex tor_complex(const FreeResolution& F, const SubquotientModule& M, const SubquotientModule& N,
                             int k, const HomogeneousIdeal& I) {
  FreeModule Fa = F.module_at(k + 1);
  FreeModule Fb = F.module_at(k);
  FreeModule Fc = F.module_at(k - 1);
  return make_three_term(tensor_term(Fa, M), tensor_term(Fb, M), tensor_term(Fc, M),
                         tensor_map(F.map_at(k), M), tensor_map(F.map_at(k - 1), M),
                         tensor_sub(Fa, M, N.gens()), tensor_sub(Fb, M, N.gens()),
                         tensor_sub(Fc, M, N.gens()), I);
}

std::vector<ModuleVector> ideal_times(const HomogeneousIdeal& In, const FreeModule& F,
                                      const std::vector<ModuleVector>& gens) {
  std::vector<ModuleVector> out;
  for (const auto& g : In.gens()) {
    for (const auto& v : gens) {
      ModuleVector w = F.mul_poly(v, g);
      if (!w.is_zero()) out.push_back(std::move(w));
    }
  }
  return out;
}

SubquotientModule complex_homology(const ThreeTermComplex& T, int n) {
  HomogeneousIdeal In = ideal_power(T.I, static_cast<unsigned>(n));
  auto target_rels = concat(T.C.rels(), ideal_times(In, T.C.ambient(), T.C_sub));
  SubquotientModule ker = kernel(T.psi, T.B, target_rels);
  auto rels = concat(T.phi.apply(T.A.gens()), ideal_times(In, T.B.ambient(), T.B_sub));
  return with_gens(T.B, ker.gens(), std::move(rels));
}

ArtinReesEstimate artin_rees_estimate(const SubquotientModule& c_prime, const SubquotientModule& image,
                                      const HomogeneousIdeal& I, int window, int n_cap) {
  if (!(c_prime.ambient() == image.ambient())) throw AlgebraError("artin_rees_estimate: ambient modules differ");
  if (window < 1) throw AlgebraError("artin_rees_estimate: window must be positive");
  const FreeModule& F = c_prime.ambient();
  const auto& rels = c_prime.rels();
  std::vector<HomogeneousIdeal> powers = {HomogeneousIdeal::unit(I.ring_ptr())};
  auto power = [&](int n) -> const HomogeneousIdeal& {
    while (static_cast<int>(powers.size()) <= n) powers.push_back(ideal_combine(powers.back(), I, IdealOp::kProduct));
    return powers[n];
  };
  std::map<int, std::vector<ModuleVector>> X;
  auto x_at = [&](int n) -> const std::vector<ModuleVector>& {
    auto it = X.find(n);
    if (it != X.end()) return it->second;
    auto lhs = concat(ideal_times(power(n), F, c_prime.gens()), rels);
    auto rhs = concat(image.gens(), rels);
    return X[n] = intersect(F, lhs, rhs);
  };
  for (int n0 = 0; n0 <= n_cap; ++n0) {
    bool ok = true;
    for (int n = n0 + 1; n <= n0 + window && ok; ++n) {
      GroebnerBasis G = groebner(F, concat(ideal_times(power(n - n0), F, x_at(n0)), rels));
      for (const auto& v : x_at(n)) {
        if (!G.contains(v)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return {n0, window, n0 + 1, n0 + window};
  }
  throw AlgebraError("no Artin-Rees offset found up to n = " + std::to_string(n_cap) + " with window " +
                     std::to_string(window));
}

UVWPackage uvw_extract(const ThreeTermComplex& T, int n_probe, int window) {
  UVWPackage P;
  auto zrels = concat(T.B.rels(), T.phi.apply(T.A.gens()));
  P.Z = SubquotientModule(T.B.ring_ptr(), T.B.ambient(), T.B.gens(), zrels);
  SubquotientModule c_prime(T.C.ring_ptr(), T.C.ambient(), T.C_sub, T.C.rels());
  SubquotientModule im(T.C.ring_ptr(), T.C.ambient(), T.psi.apply(T.B.gens()), T.C.rels());
  P.estimate = artin_rees_estimate(c_prime, im, T.I, window, n_probe);
  P.n0 = P.estimate.n0;
  HomogeneousIdeal In0 = ideal_power(T.I, static_cast<unsigned>(P.n0));
  SubquotientModule ker = kernel(T.psi, T.B, T.C.rels());
  SubquotientModule vprime =
      kernel(T.psi, T.B, concat(T.C.rels(), ideal_times(In0, T.C.ambient(), T.C_sub)));
  auto wprime = ideal_times(In0, T.B.ambient(), T.B_sub);
  P.U = SubquotientModule(T.B.ring_ptr(), T.B.ambient(), ker.gens(), zrels);
  P.V = SubquotientModule(T.B.ring_ptr(), T.B.ambient(), vprime.gens(), zrels);
  P.W = SubquotientModule(T.B.ring_ptr(), T.B.ambient(), std::move(wprime), zrels);
  return P;
}

SubquotientModule uvw_module(const SubquotientModule& U, const SubquotientModule& V, const SubquotientModule& W,
                             const HomogeneousIdeal& Im) {
  if (!(U.ambient() == V.ambient()) || !(U.ambient() == W.ambient())) {
    throw AlgebraError("uvw_module: U, V, W must share an ambient module");
  }
  auto gens = concat(U.gens(), ideal_times(Im, V.ambient(), V.gens()));
  auto rels = concat(U.rels(), ideal_times(Im, W.ambient(), W.gens()));
  return SubquotientModule(U.ring_ptr(), U.ambient(), std::move(gens), std::move(rels));
}

}  // namespace gradua
