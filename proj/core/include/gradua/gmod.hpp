#pragma once

// Graded subquotient modules (U + V)/V over R = S/J and the module algebra
// built on them.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gradua/extended_int.hpp"
#include "gradua/gring.hpp"

namespace gradua {

// (U + V)/V inside a twisted free S-module. V always contains J·e_i, so the
// module is an R-module while every computation runs over S.
class SubquotientModule {
 public:
  SubquotientModule() = default;
  SubquotientModule(GRingPtr ring, FreeModule ambient, std::vector<ModuleVector> gens,
                    std::vector<ModuleVector> rels);

  const GRingPtr& ring_ptr() const { return ring_; }
  const GradedRing& ring() const { return *ring_; }
  const FreeModule& ambient() const { return ambient_; }
  const std::vector<ModuleVector>& gens() const { return gens_; }
  const std::vector<ModuleVector>& rels() const { return rels_; }
  // Generators of U + V.
  std::vector<ModuleVector> total_gens() const;

  const GroebnerBasis& rel_basis() const;
  const GroebnerBasis& total_basis() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag rel_once;
    std::once_flag total_once;
    GroebnerBasis rel;
    GroebnerBasis total;
  };
  GRingPtr ring_;
  FreeModule ambient_;
  std::vector<ModuleVector> gens_;
  std::vector<ModuleVector> rels_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

SubquotientModule make_subquotient(GRingPtr ring, FreeModule ambient, std::vector<ModuleVector> gens,
                                   std::vector<ModuleVector> rels);
// R^r with the given twists (the free module ⊕ R(-t_i)).
SubquotientModule free_subquotient(GRingPtr ring, std::vector<int> twists);
// A free submodule-less zero module over the rank-zero ambient.
SubquotientModule zero_module(GRingPtr ring);

bool is_zero(const SubquotientModule& M);

struct GradedPiece {
  int degree = 0;
  long dimension = 0;
  std::vector<ModuleVector> basis;
};

GradedPiece graded_piece(const SubquotientModule& M, int n);
long piece_dimension(const SubquotientModule& M, int n);
std::vector<long> hilbert_function(const SubquotientModule& M, int lo, int hi);

ExtendedInt indeg(const SubquotientModule& M);

// Degree-0 map between twisted free modules: column j is the image of e_j.
struct GradedMap {
  FreeModule source;
  FreeModule target;
  std::vector<ModuleVector> images;

  ModuleVector apply(const ModuleVector& v) const;
  std::vector<ModuleVector> apply(const std::vector<ModuleVector>& vs) const;
  Polynomial entry(int row, int col) const;
};

// entries[i][j] is the (target i, source j) entry.
GradedMap make_map(const FreeModule& source, const FreeModule& target,
                   const std::vector<std::vector<Polynomial>>& entries);
GradedMap compose(const GradedMap& g, const GradedMap& f);
bool is_zero_map(const GradedMap& f);

// Kernel of the map M -> target/(target_rels + J) induced by f.
SubquotientModule kernel(const GradedMap& f, const SubquotientModule& M,
                         const std::vector<ModuleVector>& target_rels = {});
SubquotientModule image(const GradedMap& f, const SubquotientModule& M,
                        const std::vector<ModuleVector>& target_rels = {});
// f^{-1}(T) as a submodule of the source, over the given source relations.
SubquotientModule preimage(const GradedMap& f, const SubquotientModule& T,
                           const std::vector<ModuleVector>& source_rels = {});

enum class ModOp { kSum, kIntersection };

SubquotientModule mod_combine(const SubquotientModule& a, const SubquotientModule& b, ModOp op);
SubquotientModule ideal_times_module(const HomogeneousIdeal& I, const SubquotientModule& M);

// {u in U + V : a·u ⊆ span(target)} where target ⊇ V; returned as generators.
std::vector<ModuleVector> module_colon(const SubquotientModule& M, const HomogeneousIdeal& a,
                                       const std::vector<ModuleVector>& target);
// (0 :_M a)
SubquotientModule colon_ann(const SubquotientModule& M, const HomogeneousIdeal& a);
// Γ_a(M) = union of (0 :_M a^t)
SubquotientModule gamma(const SubquotientModule& M, const HomogeneousIdeal& a);
HomogeneousIdeal annihilator(const SubquotientModule& M);

std::vector<int> min_gen_degrees(const SubquotientModule& M);
// Same module presented by minimal generators.
SubquotientModule minimize(const SubquotientModule& M);

// M/N for a submodule N of M over the same ambient and relations.
SubquotientModule quotient_by(const SubquotientModule& M, const SubquotientModule& N);
// M(i), i.e. M(i)_n = M_{n+i}.
SubquotientModule twist(const SubquotientModule& M, int i);
SubquotientModule direct_sum(const SubquotientModule& a, const SubquotientModule& b);

// Numerator containment U_a + V_a ⊆ U_b + V_b in a common ambient.
bool is_submodule(const SubquotientModule& a, const SubquotientModule& b);
// Same numerator and same relations (equality of subquotients in one ambient).
bool same_module(const SubquotientModule& a, const SubquotientModule& b);
bool same_hilbert_function(const SubquotientModule& a, const SubquotientModule& b, int lo, int hi);

// True when the presentation admits a Z^d-grading refining the given one
// (all data monomial up to basis shifts), so associated primes are
// generated by variables.
bool is_multigraded(const SubquotientModule& M);

}  // namespace gradua
