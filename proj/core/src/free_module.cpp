#include "gradua/free_module.hpp"

#include <algorithm>

namespace gradua {

FreeModule::FreeModule(RingPtr ring, std::vector<int> twists, std::vector<int> priorities)
    : ring_(std::move(ring)), twists_(std::move(twists)), priorities_(std::move(priorities)) {
  if (priorities_.empty()) priorities_.assign(twists_.size(), 0);
  if (priorities_.size() != twists_.size()) {
    throw AlgebraError("priority vector length does not match rank");
  }
}

ModuleVector FreeModule::basis(int i) const {
  ModuleVector v;
  v.terms.push_back({Monomial(), static_cast<std::uint32_t>(i), ring_->one()});
  return v;
}

ModuleVector FreeModule::normalize(std::vector<VTerm> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
  ModuleVector v;
  v.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (!v.terms.empty() && v.terms.back().pos == t.pos && v.terms.back().mono == t.mono) {
      v.terms.back().coeff += t.coeff;
      if (v.terms.back().coeff.is_zero()) v.terms.pop_back();
    } else if (!t.coeff.is_zero()) {
      v.terms.push_back(std::move(t));
    }
  }
  return v;
}

ModuleVector FreeModule::from_components(std::span<const Polynomial> comps) const {
  if (static_cast<int>(comps.size()) != rank()) {
    throw AlgebraError("component count does not match rank");
  }
  std::vector<VTerm> terms;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const auto& t : comps[i].terms()) {
      terms.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
    }
  }
  return normalize(std::move(terms));
}

Polynomial FreeModule::component(const ModuleVector& v, int i) const {
  std::vector<Term> terms;
  for (const auto& t : v.terms) {
    if (static_cast<int>(t.pos) == i) terms.push_back({t.mono, t.coeff});
  }
  return Polynomial::from_terms(ring_, std::move(terms));
}

std::vector<Polynomial> FreeModule::components(const ModuleVector& v) const {
  std::vector<std::vector<Term>> parts(rank());
  for (const auto& t : v.terms) parts[t.pos].push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring_, std::move(p)));
  return out;
}

ModuleVector FreeModule::add(const ModuleVector& a, const ModuleVector& b) const {
  ModuleVector r;
  r.terms.reserve(a.size() + b.size());
  auto i = a.terms.begin();
  auto j = b.terms.begin();
  while (i != a.terms.end() || j != b.terms.end()) {
    int c = (i == a.terms.end()) ? -1 : (j == b.terms.end()) ? 1 : compare(*i, *j);
    if (c > 0) {
      r.terms.push_back(*i++);
    } else if (c < 0) {
      r.terms.push_back(*j++);
    } else {
      FieldElem s = i->coeff + j->coeff;
      if (!s.is_zero()) r.terms.push_back({i->mono, i->pos, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

ModuleVector FreeModule::sub(const ModuleVector& a, const ModuleVector& b) const {
  return sub_multiple(a, b, Monomial(), ring_->one());
}

ModuleVector FreeModule::scale(const ModuleVector& v, const FieldElem& c) const {
  ModuleVector r;
  if (c.is_zero()) return r;
  r.terms.reserve(v.size());
  for (const auto& t : v.terms) r.terms.push_back({t.mono, t.pos, t.coeff * c});
  return r;
}

ModuleVector FreeModule::mul_term(const ModuleVector& v, const Monomial& m,
                                  const FieldElem& c) const {
  ModuleVector r;
  if (c.is_zero()) return r;
  r.terms.reserve(v.size());
  for (const auto& t : v.terms) r.terms.push_back({t.mono * m, t.pos, t.coeff * c});
  return r;
}

ModuleVector FreeModule::mul_poly(const ModuleVector& v, const Polynomial& f) const {
  ModuleVector r;
  for (const auto& t : f.terms()) r = add(r, mul_term(v, t.mono, t.coeff));
  return r;
}

ModuleVector FreeModule::sub_multiple(const ModuleVector& a, const ModuleVector& b,
                                      const Monomial& m, const FieldElem& c) const {
  ModuleVector r;
  r.terms.reserve(a.size() + b.size());
  auto i = a.terms.begin();
  auto j = b.terms.begin();
  const bool unit_m = m.is_one();
  Monomial bm;
  bool have_bm = false;
  while (i != a.terms.end() || j != b.terms.end()) {
    if (j != b.terms.end() && !have_bm) {
      bm = unit_m ? j->mono : j->mono * m;
      have_bm = true;
    }
    int cmp = (i == a.terms.end()) ? -1
              : (j == b.terms.end()) ? 1
                                     : compare(i->mono, i->pos, bm, j->pos);
    if (cmp > 0) {
      r.terms.push_back(*i++);
    } else if (cmp < 0) {
      r.terms.push_back({bm, j->pos, -(j->coeff * c)});
      ++j;
      have_bm = false;
    } else {
      FieldElem s = i->coeff - j->coeff * c;
      if (!s.is_zero()) r.terms.push_back({i->mono, i->pos, std::move(s)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return r;
}

ModuleVector FreeModule::monic(const ModuleVector& v) const {
  if (v.is_zero() || v.lead().coeff.is_one()) return v;
  return scale(v, v.lead().coeff.inverse());
}

bool FreeModule::is_homogeneous(const ModuleVector& v) const {
  if (v.is_zero()) return true;
  int d = term_degree(v.lead());
  for (const auto& t : v.terms) {
    if (term_degree(t) != d) return false;
  }
  return true;
}

std::optional<int> FreeModule::degree(const ModuleVector& v) const {
  if (v.is_zero() || !is_homogeneous(v)) return std::nullopt;
  return term_degree(v.lead());
}

FreeModule FreeModule::shifted(int shift) const {
  std::vector<int> t = twists_;
  for (auto& x : t) x -= shift;
  return FreeModule(ring_, std::move(t), priorities_);
}

std::string FreeModule::format(const ModuleVector& v) const {
  std::string s = "[";
  auto comps = components(v);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += comps[i].to_string();
  }
  return s + "]";
}

FreeModule direct_sum(const FreeModule& a, const FreeModule& b) {
  std::vector<int> t = a.twists();
  t.insert(t.end(), b.twists().begin(), b.twists().end());
  std::vector<int> p = a.priorities();
  p.insert(p.end(), b.priorities().begin(), b.priorities().end());
  return FreeModule(a.ring_ptr() ? a.ring_ptr() : b.ring_ptr(), std::move(t), std::move(p));
}

ModuleVector embed(const ModuleVector& v, std::uint32_t offset) {
  ModuleVector r = v;
  for (auto& t : r.terms) t.pos += offset;
  return r;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& s = a.terms[i];
    const auto& t = b.terms[i];
    if (s.pos != t.pos || !(s.mono == t.mono) || !(s.coeff == t.coeff)) return false;
  }
  return true;
}

}  // namespace gradua
