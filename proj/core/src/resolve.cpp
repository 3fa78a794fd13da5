#include "gradua/resolve.hpp"

namespace gradua {

namespace {

std::vector<ModuleVector> basis_of(const FreeModule& F) {
  std::vector<ModuleVector> out;
  for (int i = 0; i < F.rank(); ++i) out.push_back(F.basis(i));
  return out;
}

FreeModule module_for(const GradedRing& R, const FreeModule& F, const std::vector<ModuleVector>& gens) {
  std::vector<int> tw;
  for (const auto& g : gens) tw.push_back(*F.degree(g));
  return R.free_module(std::move(tw));
}

// Drops kernel elements that already vanish over R, i.e. lie in J·F.
std::vector<ModuleVector> outside(const FreeModule& F, std::vector<ModuleVector> gens,
                                  const std::vector<ModuleVector>& rels) {
  if (rels.empty()) return gens;
  GroebnerBasis G = groebner(F, rels);
  std::vector<ModuleVector> out;
  for (auto& g : gens) {
    if (!G.contains(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

FreeModule FreeResolution::module_at(int k) const {
  if (k < 0) return ring->free_module({});
  if (k <= length()) return modules[k];
  if (!complete) throw AlgebraError("resolution is truncated before step " + std::to_string(k));
  return ring->free_module({});
}

GradedMap FreeResolution::map_at(int k) const {
  if (k >= 0 && k < static_cast<int>(maps.size())) return maps[k];
  FreeModule src = module_at(k + 1);
  FreeModule tgt = module_at(k);
  GradedMap f{src, tgt, {}};
  f.images.assign(src.rank(), ModuleVector{});
  return f;
}

FreeResolution free_resolution(const SubquotientModule& M, int k_max, bool minimal) {
  const GradedRing& R = M.ring();
  FreeResolution res;
  res.ring = M.ring_ptr();
  res.minimal = minimal;

  std::vector<ModuleVector> gens =
      minimal ? minimal_generators(M.ambient(), M.gens(), M.rels()) : outside(M.ambient(), M.gens(), M.rels());
  FreeModule F0 = module_for(R, M.ambient(), gens);
  res.modules.push_back(F0);
  res.augmentation = gens;
  if (F0.rank() == 0) {
    res.complete = true;
    return res;
  }
  std::vector<ModuleVector> K = eliminate(M.ambient(), F0, gens, basis_of(F0), M.rels());

  for (int k = 1; k <= k_max; ++k) {
    FreeModule prev = res.modules.back();
    std::vector<ModuleVector> rels = R.relation_vectors(prev);
    std::vector<ModuleVector> next = minimal ? minimal_generators(prev, K, rels) : outside(prev, K, rels);
    if (next.empty()) {
      res.complete = true;
      return res;
    }
    FreeModule Fk = module_for(R, prev, next);
    res.maps.push_back(GradedMap{Fk, prev, next});
    res.modules.push_back(Fk);
    if (k < k_max) K = eliminate(prev, Fk, next, basis_of(Fk), rels);
  }
  return res;
}

bool has_no_unit_entries(const FreeResolution& F) {
  for (const auto& d : F.maps) {
    for (const auto& col : d.images) {
      for (const auto& t : col.terms) {
        if (t.mono.is_one()) return false;
      }
    }
  }
  return true;
}

}  // namespace gradua
