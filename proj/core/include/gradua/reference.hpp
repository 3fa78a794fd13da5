#pragma once

// Built-in reference computations with known closed forms, shared by the
// `verify-paper` command and the acceptance suite.
//
//   cross:   R = K[x,y]/(xy), L = R/(x), M = N = R, I = (y)
//   ideal:   same ring and L, M = N = (y), I = (y)
//   torsion: R = K[x,y], U = V = W = R/(x*y^3), I = (x^2)

#include <string>
#include <vector>

#include "gradua/sweep.hpp"

namespace gradua {

struct ReferenceCheck {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CrossData {
  GRingPtr ring;
  SubquotientModule L;
  SubquotientModule M;
  SubquotientModule N;
  HomogeneousIdeal I;
  HomogeneousIdeal maximal;
};

// M = N = R when `ideal_module` is false, M = N = (y) otherwise.
CrossData cross_data(bool ideal_module, Field field = Field::rationals());

struct TorsionData {
  GRingPtr ring;
  SubquotientModule U;
  HomogeneousIdeal I;
  PrimeCandidate p;
  PrimeCandidate m;
};

TorsionData torsion_data(int a, int b, Field field = Field::rationals());

FamilySpec cross_family(const CrossData& d, Functor functor, int k);
FamilySpec torsion_family(const TorsionData& d);

std::vector<ReferenceCheck> cross_checks(int jobs = 1);
std::vector<ReferenceCheck> ideal_checks(int jobs = 1);
std::vector<ReferenceCheck> torsion_checks(int jobs = 1);
std::vector<ReferenceCheck> reference_checks(int jobs = 1);

std::string format_values(const std::vector<ExtendedInt>& values);

}  // namespace gradua
