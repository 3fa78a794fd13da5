#pragma once

// Hom and tensor complexes of a free resolution, Ext and Tor as subquotients,
// homology of three-term complexes with submodule data and the (U, V, W)
// reduction of that homology.

#include <vector>

#include "gradua/resolve.hpp"

namespace gradua {

// Hom(F, M) = ⊕ M(a_i) and F ⊗ M = ⊕ M(-a_i) for F = ⊕ R(-a_i).
SubquotientModule hom_term(const FreeModule& F, const SubquotientModule& M);
SubquotientModule tensor_term(const FreeModule& F, const SubquotientModule& M);
// Submodule Hom(F, N) (resp. F ⊗ N image) inside the term for M, as generators.
std::vector<ModuleVector> hom_sub(const FreeModule& F, const SubquotientModule& M,
                                  const std::vector<ModuleVector>& n_gens);
std::vector<ModuleVector> tensor_sub(const FreeModule& F, const SubquotientModule& M,
                                     const std::vector<ModuleVector>& n_gens);
// d : F' -> F induces Hom(F, M) -> Hom(F', M) and F' ⊗ M -> F ⊗ M.
GradedMap hom_map(const GradedMap& d, const SubquotientModule& M);
GradedMap tensor_map(const GradedMap& d, const SubquotientModule& M);

SubquotientModule ext(const FreeResolution& F, const SubquotientModule& M, int k);
SubquotientModule ext(const SubquotientModule& L, const SubquotientModule& M, int k);
SubquotientModule tor(const FreeResolution& F, const SubquotientModule& M, int k);
SubquotientModule tor(const SubquotientModule& L, const SubquotientModule& M, int k);

// A -φ-> B -ψ-> C with submodules A' ⊆ A, B' ⊆ B, C' ⊆ C (as generators in
// the ambients) and an ideal I. Maps act on the ambient free modules.
struct ThreeTermComplex {
  SubquotientModule A;
  SubquotientModule B;
  SubquotientModule C;
  GradedMap phi;
  GradedMap psi;
  std::vector<ModuleVector> A_sub;
  std::vector<ModuleVector> B_sub;
  std::vector<ModuleVector> C_sub;
  HomogeneousIdeal I;
};

// Validates ψφ = 0, φ(A') ⊆ B' and ψ(B') ⊆ C'.
ThreeTermComplex make_three_term(SubquotientModule A, SubquotientModule B, SubquotientModule C,
                                 GradedMap phi, GradedMap psi, std::vector<ModuleVector> A_sub,
                                 std::vector<ModuleVector> B_sub, std::vector<ModuleVector> C_sub,
                                 HomogeneousIdeal I);

// Hom(F_{k-1}, M) -> Hom(F_k, M) -> Hom(F_{k+1}, M) with submodules Hom(-, N).
ThreeTermComplex ext_complex(const FreeResolution& F, const SubquotientModule& M,
                             const SubquotientModule& N, int k, const HomogeneousIdeal& I);
// F_{k+1} ⊗ M -> F_k ⊗ M -> F_{k-1} ⊗ M with submodules F ⊗ N.
ThreeTermComplex tor_complex(const FreeResolution& F, const SubquotientModule& M,
                             const SubquotientModule& N, int k, const HomogeneousIdeal& I);

// Homology at B of A/I^nA' -> B/I^nB' -> C/I^nC'.
SubquotientModule complex_homology(const ThreeTermComplex& T, int n);

// I^n applied to a list of generators.
std::vector<ModuleVector> ideal_times(const HomogeneousIdeal& In, const FreeModule& F,
                                      const std::vector<ModuleVector>& gens);

struct ArtinReesEstimate {
  int n0 = 0;
  int window = 0;
  int verified_lo = 0;
  int verified_hi = 0;
};

// Least n0 <= n_cap with I^n C' ∩ N = I^{n-n0}(I^{n0} C' ∩ N) for every n in
// [n0 + 1, n0 + window]; both modules are taken modulo their common relations.
// Throws AlgebraError when no offset passes.
ArtinReesEstimate artin_rees_estimate(const SubquotientModule& c_prime, const SubquotientModule& image,
                                      const HomogeneousIdeal& I, int window, int n_cap);

// Z with submodules U, V, W (sharing Z's ambient and relations) and offset n0.
struct UVWPackage {
  SubquotientModule Z;
  SubquotientModule U;
  SubquotientModule V;
  SubquotientModule W;
  int n0 = 0;
  ArtinReesEstimate estimate;
};

UVWPackage uvw_extract(const ThreeTermComplex& T, int n_probe, int window = 4);

// (U + I^m V)/I^m W for submodules sharing ambient and relations.
SubquotientModule uvw_module(const SubquotientModule& U, const SubquotientModule& V,
                             const SubquotientModule& W, const HomogeneousIdeal& Im);

}  // namespace gradua
