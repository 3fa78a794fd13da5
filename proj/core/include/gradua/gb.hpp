#pragma once

// Buchberger engine for homogeneous submodules of twisted free modules over S.
//
// The engine runs degree by degree, so it also yields minimal generators
// (graded Nakayama) and a degree-truncated basis for free. Inputs may carry a
// "tag" vector in a second free module T; the engine then works in F ⊕ T
// with F eliminated first and reports every tag whose F-part vanished. Those
// tags generate {t : (0, t) ∈ span of the inputs}, which gives syzygies,
// kernels, intersections and preimages from one routine.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gradua/free_module.hpp"

namespace gradua {

struct GroebnerOptions {
  // Only degrees <= degree_bound are computed when set.
  std::optional<int> degree_bound;
  // Fully reduce tails at the end (reduced basis).
  bool reduce_tails = true;
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(FreeModule module, std::vector<ModuleVector> elements, bool reduced,
                std::optional<int> degree_bound);

  const FreeModule& module() const { return module_; }
  const std::vector<ModuleVector>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool is_reduced() const { return reduced_; }
  std::optional<int> degree_bound() const { return degree_bound_; }

  // Remainder of multivariate division by the basis.
  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const;

  // Index of an element whose leading term divides (m, pos), or -1.
  int find_divisor(const Monomial& m, std::uint32_t pos) const;
  // Number of standard monomials m*e_i with deg(m) + twist(i) == degree;
  // this is dim_K (F/P)_degree for the submodule P.
  long count_standard(int degree) const;
  std::vector<VTerm> standard_monomials(int degree) const;

 private:
  FreeModule module_;
  std::vector<ModuleVector> elements_;
  std::vector<std::vector<int>> by_pos_;
  bool reduced_ = false;
  std::optional<int> degree_bound_;
};

GroebnerBasis groebner(const FreeModule& F, std::span<const ModuleVector> gens,
                       const GroebnerOptions& opts = {});

// Agrees with groebner() on every component of degree <= max_degree.
GroebnerBasis groebner_up_to(const FreeModule& F, std::span<const ModuleVector> gens,
                             int max_degree);

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& G);

bool member(const FreeModule& F, const ModuleVector& v, std::span<const ModuleVector> gens);

// S-vector of two basis elements with leading terms in the same position, or
// nullopt if their leading positions differ.
std::optional<ModuleVector> s_vector(const FreeModule& F, const ModuleVector& a,
                                     const ModuleVector& b);

// Checks that every S-vector reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

// Same submodule (mutual membership).
bool same_submodule(const GroebnerBasis& a, const GroebnerBasis& b);

struct EngineInput {
  ModuleVector vec;  // in F
  ModuleVector tag;  // in T (may be zero)
  bool relation = false;
};

struct EngineResult {
  GroebnerBasis basis;                  // basis of the F-projection
  std::vector<ModuleVector> basis_tags;  // tag of each basis element
  std::vector<ModuleVector> syzygies;    // tags of elements whose F-part is zero
  std::vector<std::size_t> minimal;      // indices of non-relation inputs kept as minimal
};

// Every input must be homogeneous with vec and tag of the same degree.
// Relation inputs of a degree are processed before non-relation inputs of that
// degree, so `minimal` lists minimal generators modulo the relations.
EngineResult run_engine(const FreeModule& F, const FreeModule& T, std::vector<EngineInput> inputs,
                        const GroebnerOptions& opts = {});

// Minimal homogeneous generators of (gens + rels)/rels, as a subset of gens.
std::vector<ModuleVector> minimal_generators(const FreeModule& F,
                                             std::span<const ModuleVector> gens,
                                             std::span<const ModuleVector> rels);

// Generators of {c : sum c_i gens_i = 0}, living in `syz_module` whose basis
// degrees are the degrees of gens. Minimalized unless `minimalize` is false.
std::vector<ModuleVector> syzygies(const FreeModule& F, std::span<const ModuleVector> gens,
                                   FreeModule* syz_module = nullptr, bool minimalize = true);

// Generators of {b : (0, b) lies in the span of the pairs (a_i, b_i) and (r, 0)}
// for r in a_rels. Each pair must be homogeneous of a common degree.
std::vector<ModuleVector> eliminate(const FreeModule& A, const FreeModule& B,
                                    std::span<const ModuleVector> a,
                                    std::span<const ModuleVector> b,
                                    std::span<const ModuleVector> a_rels);

// Generators of span(x) ∩ span(y) inside F.
std::vector<ModuleVector> intersect(const FreeModule& F, std::span<const ModuleVector> x,
                                    std::span<const ModuleVector> y);

}  // namespace gradua
