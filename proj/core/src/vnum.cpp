#include "gradua/vnum.hpp"

#include <algorithm>
#include <bit>

namespace gradua {

namespace {

bool same_ideal(const HomogeneousIdeal& a, const HomogeneousIdeal& b) { return a.contains(b) && b.contains(a); }

bool strictly_contains(const HomogeneousIdeal& q, const HomogeneousIdeal& p) {
  return q.contains(p) && !p.contains(q);
}

}  // namespace

PrimeCandidate variable_prime(const GRingPtr& ring, const std::vector<int>& vars) {
  std::vector<Polynomial> gens;
  std::string label = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    gens.push_back(Polynomial::variable(ring->poly_ptr(), vars[i]));
    if (i) label += ", ";
    label += ring->poly().name(vars[i]);
  }
  if (vars.empty()) label += "0";
  label += ")";
  PrimeCandidate p{HomogeneousIdeal(ring, gens), PrimeProvenance::kVariableSubset, true, label};
  for (const auto& f : ring->relations()) {
    for (const auto& t : f.terms()) {
      bool hit = std::any_of(vars.begin(), vars.end(), [&](int v) { return t.mono.exponent(v) > 0; });
      if (!hit) p.verified_prime = false;
    }
  }
  return p;
}

PrimeCandidate user_prime(HomogeneousIdeal ideal) {
  std::string label = ideal.to_string();
  return PrimeCandidate{std::move(ideal), PrimeProvenance::kUserSupplied, false, std::move(label)};
}

bool is_associated(const PrimeCandidate& p, const SubquotientModule& M) {
  SubquotientModule K = colon_ann(M, p.ideal);
  if (is_zero(K)) return false;
  return p.ideal.contains(annihilator(K));
}

AssResult ass_search(const SubquotientModule& M, const std::vector<PrimeCandidate>& extra) {
  AssResult res;
  if (is_zero(M)) {
    res.complete = true;
    return res;
  }
  HomogeneousIdeal ann = annihilator(M);
  const int d = M.ring().num_vars();
  std::vector<PrimeCandidate> tested;
  for (int size = 0; size <= d; ++size) {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<int> vars;
      for (int i = 0; i < d; ++i) {
        if (mask & (1u << i)) vars.push_back(i);
      }
      PrimeCandidate p = variable_prime(M.ring_ptr(), vars);
      if (!p.verified_prime || !p.ideal.contains(ann)) continue;
      tested.push_back(p);
      if (is_associated(p, M)) res.primes.push_back(std::move(p));
    }
  }
  for (const auto& p : extra) {
    bool seen = std::any_of(tested.begin(), tested.end(),
                            [&](const PrimeCandidate& q) { return same_ideal(q.ideal, p.ideal); });
    if (seen || !p.ideal.contains(ann)) continue;
    tested.push_back(p);
    if (is_associated(p, M)) res.primes.push_back(p);
  }
  res.complete = is_multigraded(M);
  return res;
}

ExtendedInt local_v(const SubquotientModule& M, const PrimeCandidate& p, const std::vector<PrimeCandidate>& ass) {
  bool listed = std::any_of(ass.begin(), ass.end(),
                            [&](const PrimeCandidate& q) { return same_ideal(q.ideal, p.ideal); });
  if (!listed) throw AlgebraError("local_v: " + p.label + " is not an associated prime");
  SubquotientModule K = colon_ann(M, p.ideal);
  std::vector<const PrimeCandidate*> bigger;
  for (const auto& q : ass) {
    if (strictly_contains(q.ideal, p.ideal)) bigger.push_back(&q);
  }
  if (bigger.empty()) return indeg(K);
  HomogeneousIdeal a = bigger.front()->ideal;
  for (std::size_t i = 1; i < bigger.size(); ++i) a = ideal_combine(a, bigger[i]->ideal, IdealOp::kProduct);
  SubquotientModule G = gamma(M, a);
  std::vector<ModuleVector> rels = G.gens();
  rels.insert(rels.end(), M.rels().begin(), M.rels().end());
  return indeg(SubquotientModule(M.ring_ptr(), M.ambient(), K.gens(), std::move(rels)));
}

VRecord v_number(const SubquotientModule& M, const std::vector<PrimeCandidate>& extra) {
  VRecord rec;
  rec.indeg = indeg(M);
  AssResult ass = ass_search(M, extra);
  rec.ass = ass.primes;
  rec.ass_complete = ass.complete;
  for (const auto& p : rec.ass) {
    ExtendedInt v = local_v(M, p, rec.ass);
    rec.v_locals.emplace_back(p.label, v);
    rec.v = minimum(rec.v, v);
  }
  return rec;
}

}  // namespace gradua
