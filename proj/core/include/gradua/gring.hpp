#pragma once

// Graded quotient rings R = S/J and homogeneous ideals of R.

#include <memory>
#include <string>
#include <vector>

#include "gradua/gb.hpp"

namespace gradua {

class GradedRing {
 public:
  GradedRing(RingPtr poly, std::vector<Polynomial> relations);

  const RingPtr& poly_ptr() const { return poly_; }
  const PolyRing& poly() const { return *poly_; }
  Field field() const { return poly_->field(); }
  int num_vars() const { return poly_->num_vars(); }

  // Minimal generators of J, reduced.
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& relation_basis() const { return gb_; }
  bool is_polynomial_ring() const { return relations_.empty(); }
  // True when every relation is a monomial.
  bool is_monomial() const;

  // Canonical representative modulo J.
  Polynomial reduce(const Polynomial& f) const;

  FreeModule free_module(std::vector<int> twists) const { return FreeModule(poly_, std::move(twists)); }
  // The rank-one module S used for ideals.
  const FreeModule& line() const { return line_; }
  ModuleVector to_vector(const Polynomial& f) const;
  Polynomial to_poly(const ModuleVector& v) const;

  // J·e_i for every basis vector of F.
  std::vector<ModuleVector> relation_vectors(const FreeModule& F) const;

  Polynomial parse(std::string_view text) const { return parse_polynomial(poly_, text); }
  std::string to_string() const;

 private:
  RingPtr poly_;
  FreeModule line_;
  std::vector<Polynomial> relations_;
  GroebnerBasis gb_;
};

using GRingPtr = std::shared_ptr<const GradedRing>;

GRingPtr make_ring(std::vector<std::string> names, std::vector<int> weights,
                   const std::vector<std::string>& relations, Field field = Field::rationals(),
                   OrderKind order = OrderKind::kGRevLex);
GRingPtr make_ring(RingPtr poly, std::vector<Polynomial> relations);

// Homogeneous ideal of R, stored through its preimage J + (gens) in S.
class HomogeneousIdeal {
 public:
  HomogeneousIdeal() = default;
  HomogeneousIdeal(GRingPtr ring, std::vector<Polynomial> gens);

  static HomogeneousIdeal unit(GRingPtr ring);
  static HomogeneousIdeal zero(GRingPtr ring);

  const GRingPtr& ring_ptr() const { return ring_; }
  const GradedRing& ring() const { return *ring_; }
  // Minimal homogeneous generators modulo J, sorted by degree.
  const std::vector<Polynomial>& gens() const { return gens_; }
  std::vector<int> min_gen_degrees() const;
  // Reduced basis of the preimage ideal in S.
  const GroebnerBasis& basis() const { return gb_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  bool contains(const HomogeneousIdeal& other) const;

  std::string to_string() const;

  friend bool operator==(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    return a.contains(b) && b.contains(a);
  }

 private:
  GRingPtr ring_;
  std::vector<Polynomial> gens_;
  GroebnerBasis gb_;
};

HomogeneousIdeal ideal_power(const HomogeneousIdeal& I, unsigned n);

enum class IdealOp { kSum, kProduct, kIntersection };

HomogeneousIdeal ideal_combine(const HomogeneousIdeal& a, const HomogeneousIdeal& b, IdealOp op);

struct MinimalGenerators {
  std::vector<Polynomial> gens;
  std::vector<int> degrees;
};

MinimalGenerators min_gens_ideal(const HomogeneousIdeal& I);

}  // namespace gradua
