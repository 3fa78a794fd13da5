#pragma once

// Graded free resolutions over R = S/J, truncated at a requested length.

#include <vector>

#include "gradua/gmod.hpp"

namespace gradua {

struct FreeResolution {
  GRingPtr ring;
  // F_0, ..., F_len; a rank-zero module past the end means the resolution stopped.
  std::vector<FreeModule> modules;
  // maps[k] : F_{k+1} -> F_k
  std::vector<GradedMap> maps;
  // Images of the basis of F_0 in the ambient of the resolved module.
  std::vector<ModuleVector> augmentation;
  bool minimal = true;
  // True when the next kernel was found to be zero, so F_k = 0 beyond length().
  bool complete = false;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  // F_k, or the zero module when the resolution is complete and k is past the end.
  FreeModule module_at(int k) const;
  // The map F_{k+1} -> F_k.
  GradedMap map_at(int k) const;
};

FreeResolution free_resolution(const SubquotientModule& M, int k_max, bool minimal = true);

// True when every map entry lies in the irrelevant ideal.
bool has_no_unit_entries(const FreeResolution& F);

}  // namespace gradua
