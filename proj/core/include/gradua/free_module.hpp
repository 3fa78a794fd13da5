#pragma once

// Twisted graded free modules over the polynomial ring S and their vectors.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradua/poly.hpp"

namespace gradua {

struct VTerm {
  Monomial mono;
  std::uint32_t pos = 0;
  FieldElem coeff;
};

// Sparse vector of terms, kept in descending order for the owning FreeModule.
struct ModuleVector {
  std::vector<VTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const VTerm& lead() const { return terms.front(); }
  std::size_t size() const { return terms.size(); }
};

// S^r with basis e_i of degree twist(i), i.e. the module ⊕ S(-twist(i)).
//
// Terms are compared first by priority (larger first), then by twisted degree
// deg(m) + twist(pos), then by the ring order on m, then by position (lower
// first). Equal priorities give a term-over-position order refined by the
// grading; distinct priorities split the module into position-over-term
// blocks, which is what the syzygy engine uses for elimination.
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr ring, std::vector<int> twists, std::vector<int> priorities = {});

  const RingPtr& ring_ptr() const { return ring_; }
  const PolyRing& ring() const { return *ring_; }
  Field field() const { return ring_->field(); }
  int rank() const { return static_cast<int>(twists_.size()); }
  int twist(int i) const { return twists_[i]; }
  const std::vector<int>& twists() const { return twists_; }
  int priority(int i) const { return priorities_[i]; }
  const std::vector<int>& priorities() const { return priorities_; }

  int term_degree(const VTerm& t) const { return t.mono.degree() + twists_[t.pos]; }

  int compare(const Monomial& a, std::uint32_t pa, const Monomial& b, std::uint32_t pb) const {
    if (priorities_[pa] != priorities_[pb]) return priorities_[pa] > priorities_[pb] ? 1 : -1;
    int da = a.degree() + twists_[pa];
    int db = b.degree() + twists_[pb];
    if (da != db) return da > db ? 1 : -1;
    int c = ring_->compare(a, b);
    if (c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
  int compare(const VTerm& a, const VTerm& b) const {
    return compare(a.mono, a.pos, b.mono, b.pos);
  }

  ModuleVector basis(int i) const;
  ModuleVector zero() const { return {}; }
  // Sorts and merges arbitrary terms into canonical form.
  ModuleVector normalize(std::vector<VTerm> terms) const;
  ModuleVector from_components(std::span<const Polynomial> comps) const;
  Polynomial component(const ModuleVector& v, int i) const;
  std::vector<Polynomial> components(const ModuleVector& v) const;

  ModuleVector add(const ModuleVector& a, const ModuleVector& b) const;
  ModuleVector sub(const ModuleVector& a, const ModuleVector& b) const;
  ModuleVector scale(const ModuleVector& v, const FieldElem& c) const;
  ModuleVector mul_term(const ModuleVector& v, const Monomial& m, const FieldElem& c) const;
  ModuleVector mul_poly(const ModuleVector& v, const Polynomial& f) const;
  // a - c*m*b in one merge pass.
  ModuleVector sub_multiple(const ModuleVector& a, const ModuleVector& b, const Monomial& m,
                            const FieldElem& c) const;
  // Scales so that the leading coefficient is one.
  ModuleVector monic(const ModuleVector& v) const;

  bool is_homogeneous(const ModuleVector& v) const;
  // Twisted degree of a nonzero homogeneous vector; nullopt otherwise.
  std::optional<int> degree(const ModuleVector& v) const;

  // Module with the same ring and twists shifted: twist(i) - shift.
  FreeModule shifted(int shift) const;

  std::string format(const ModuleVector& v) const;

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return (a.ring_ == b.ring_ || (a.ring_ && b.ring_ && *a.ring_ == *b.ring_)) &&
           a.twists_ == b.twists_;
  }

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  std::vector<int> priorities_;
};

FreeModule direct_sum(const FreeModule& a, const FreeModule& b);

// Re-indexes a vector of `from` into `to`, sending position p to p + offset.
ModuleVector embed(const ModuleVector& v, std::uint32_t offset);

bool operator==(const ModuleVector& a, const ModuleVector& b);

}  // namespace gradua
