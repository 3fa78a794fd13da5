#pragma once

// Associated primes and v-numbers of graded subquotient modules.

#include <string>
#include <utility>
#include <vector>

#include "gradua/gmod.hpp"

namespace gradua {

enum class PrimeProvenance { kVariableSubset, kUserSupplied };

struct PrimeCandidate {
  HomogeneousIdeal ideal;
  PrimeProvenance provenance = PrimeProvenance::kUserSupplied;
  // Variable subsets are prime when they contain J; user input is trusted.
  bool verified_prime = false;
  std::string label;
};

// The image of (x_i : i in vars) in R.
PrimeCandidate variable_prime(const GRingPtr& ring, const std::vector<int>& vars);
PrimeCandidate user_prime(HomogeneousIdeal ideal);

// p ∈ Ass(M) iff K = (0 :_M p) is nonzero and Ann(K) ⊆ p.
bool is_associated(const PrimeCandidate& p, const SubquotientModule& M);

struct AssResult {
  std::vector<PrimeCandidate> primes;
  // True when the search is exhaustive (multigraded presentation).
  bool complete = false;
};

AssResult ass_search(const SubquotientModule& M, const std::vector<PrimeCandidate>& extra = {});

// v_p(M) = indeg(K / (K ∩ Γ_a(M))) with K = (0 :_M p) and a the product of
// the primes of `ass` strictly containing p (a = R when there are none).
ExtendedInt local_v(const SubquotientModule& M, const PrimeCandidate& p, const std::vector<PrimeCandidate>& ass);

struct VRecord {
  std::vector<PrimeCandidate> ass;
  bool ass_complete = false;
  ExtendedInt v;
  // v_p for every p in ass, in the same order.
  std::vector<std::pair<std::string, ExtendedInt>> v_locals;
  ExtendedInt indeg;
};

VRecord v_number(const SubquotientModule& M, const std::vector<PrimeCandidate>& extra = {});

}  // namespace gradua
