#include "gradua/gring.hpp"

#include <algorithm>

namespace gradua {

namespace {

std::vector<ModuleVector> as_vectors(const GradedRing& R, const std::vector<Polynomial>& ps) {
  std::vector<ModuleVector> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(R.to_vector(p));
  return out;
}

void check_homogeneous(const Polynomial& f, const char* what) {
  if (!f.is_zero() && !f.is_homogeneous()) {
    throw AlgebraError(std::string(what) + " is not homogeneous: " + f.to_string());
  }
}

}  // namespace

GradedRing::GradedRing(RingPtr poly, std::vector<Polynomial> relations)
    : poly_(std::move(poly)), line_(poly_, {0}) {
  std::vector<ModuleVector> vs;
  for (auto& f : relations) {
    check_homogeneous(f, "defining relation");
    if (!f.is_zero()) vs.push_back(to_vector(f));
  }
  for (const auto& v : minimal_generators(line_, vs, {})) relations_.push_back(to_poly(v));
  gb_ = groebner(line_, vs);
}

bool GradedRing::is_monomial() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const Polynomial& f) { return f.is_monomial(); });
}

Polynomial GradedRing::reduce(const Polynomial& f) const {
  if (relations_.empty()) return f;
  return to_poly(gb_.normal_form(to_vector(f)));
}

ModuleVector GradedRing::to_vector(const Polynomial& f) const {
  ModuleVector v;
  v.terms.reserve(f.size());
  for (const auto& t : f.terms()) v.terms.push_back({t.mono, 0, t.coeff});
  return v;
}

Polynomial GradedRing::to_poly(const ModuleVector& v) const {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(poly_, std::move(terms));
}

std::vector<ModuleVector> GradedRing::relation_vectors(const FreeModule& F) const {
  std::vector<ModuleVector> out;
  for (int i = 0; i < F.rank(); ++i) {
    for (const auto& f : relations_) {
      ModuleVector v;
      for (const auto& t : f.terms()) v.terms.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::string GradedRing::to_string() const {
  std::string s = poly_->field().to_string() + "[";
  for (int i = 0; i < poly_->num_vars(); ++i) {
    if (i) s += ", ";
    s += poly_->name(i);
    if (poly_->weight(i) != 1) s += ":" + std::to_string(poly_->weight(i));
  }
  s += "]";
  if (!relations_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) s += ", ";
      s += relations_[i].to_string();
    }
    s += ")";
  }
  return s;
}

GRingPtr make_ring(RingPtr poly, std::vector<Polynomial> relations) {
  return std::make_shared<const GradedRing>(std::move(poly), std::move(relations));
}

GRingPtr make_ring(std::vector<std::string> names, std::vector<int> weights,
                   const std::vector<std::string>& relations, Field field, OrderKind order) {
  auto S = std::make_shared<const PolyRing>(std::move(names), std::move(weights), field, order);
  std::vector<Polynomial> rel;
  for (const auto& r : relations) rel.push_back(parse_polynomial(S, r));
  return make_ring(S, std::move(rel));
}

// ---------------------------------------------------------------------------

HomogeneousIdeal::HomogeneousIdeal(GRingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  const GradedRing& R = *ring_;
  std::vector<ModuleVector> vs;
  for (const auto& f : gens) {
    check_homogeneous(f, "ideal generator");
    Polynomial r = R.reduce(f);
    if (!r.is_zero()) vs.push_back(R.to_vector(r));
  }
  std::vector<ModuleVector> rel = as_vectors(R, R.relations());
  auto mins = minimal_generators(R.line(), vs, rel);
  for (auto& v : mins) gens_.push_back(R.to_poly(R.line().monic(v)));
  std::stable_sort(gens_.begin(), gens_.end(), [](const Polynomial& a, const Polynomial& b) {
    return *a.degree() < *b.degree();
  });
  std::vector<ModuleVector> all = rel;
  for (const auto& g : gens_) all.push_back(R.to_vector(g));
  gb_ = groebner(R.line(), all);
}

HomogeneousIdeal HomogeneousIdeal::unit(GRingPtr ring) {
  Polynomial one = Polynomial::constant(ring->poly_ptr(), ring->poly().one());
  return HomogeneousIdeal(std::move(ring), {one});
}

HomogeneousIdeal HomogeneousIdeal::zero(GRingPtr ring) { return HomogeneousIdeal(std::move(ring), {}); }

std::vector<int> HomogeneousIdeal::min_gen_degrees() const {
  std::vector<int> d;
  for (const auto& g : gens_) d.push_back(*g.degree());
  return d;
}

bool HomogeneousIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].degree() == 0;
}

bool HomogeneousIdeal::contains(const Polynomial& f) const {
  return gb_.contains(ring_->to_vector(f));
}

bool HomogeneousIdeal::contains(const HomogeneousIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

std::string HomogeneousIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

namespace {

HomogeneousIdeal product(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(f * g);
  }
  return HomogeneousIdeal(a.ring_ptr(), std::move(gens));
}

}  // namespace

HomogeneousIdeal ideal_power(const HomogeneousIdeal& I, unsigned n) {
  HomogeneousIdeal result = HomogeneousIdeal::unit(I.ring_ptr());
  HomogeneousIdeal base = I;
  bool first = true;
  while (n > 0) {
    if (n & 1u) {
      result = first ? base : product(result, base);
      first = false;
    }
    n >>= 1u;
    if (n > 0) base = product(base, base);
  }
  return result;
}

HomogeneousIdeal ideal_combine(const HomogeneousIdeal& a, const HomogeneousIdeal& b, IdealOp op) {
  if (a.ring_ptr() != b.ring_ptr()) throw AlgebraError("ideal_combine: ideals live in different rings");
  switch (op) {
    case IdealOp::kSum: {
      std::vector<Polynomial> gens = a.gens();
      gens.insert(gens.end(), b.gens().begin(), b.gens().end());
      return HomogeneousIdeal(a.ring_ptr(), std::move(gens));
    }
    case IdealOp::kProduct:
      return product(a, b);
    case IdealOp::kIntersection: {
      const GradedRing& R = a.ring();
      std::vector<ModuleVector> x = as_vectors(R, R.relations());
      std::vector<ModuleVector> y = x;
      for (const auto& g : a.gens()) x.push_back(R.to_vector(g));
      for (const auto& g : b.gens()) y.push_back(R.to_vector(g));
      std::vector<Polynomial> gens;
      for (const auto& v : intersect(R.line(), x, y)) gens.push_back(R.to_poly(v));
      return HomogeneousIdeal(a.ring_ptr(), std::move(gens));
    }
  }
  throw AlgebraError("ideal_combine: unknown operation");
}

MinimalGenerators min_gens_ideal(const HomogeneousIdeal& I) {
  return {I.gens(), I.min_gen_degrees()};
}

}  // namespace gradua
