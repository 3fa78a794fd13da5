#pragma once

// Weighted-graded multivariate polynomials over an exact field.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gradua/scalars.hpp"

namespace gradua {

inline constexpr int kMaxVariables = 8;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class OrderKind { kGRevLex, kGLex };

std::string to_string(OrderKind k);
OrderKind parse_order_kind(std::string_view s);

// Dense exponent vector with its weighted degree cached. Monomials are only
// meaningful relative to the PolyRing that built them.
class Monomial {
 public:
  Monomial() = default;

  int degree() const { return degree_; }
  int exponent(int var) const { return exps_[var]; }
  bool is_one() const { return total_ == 0; }

  Monomial operator*(const Monomial& b) const;
  // Precondition: divides(b, *this).
  Monomial operator/(const Monomial& b) const;

  friend bool divides(const Monomial& a, const Monomial& b) {
    if (a.degree_ > b.degree_) return false;
    for (int i = 0; i < kMaxVariables; ++i) {
      if (a.exps_[i] > b.exps_[i]) return false;
    }
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  // True when no variable occurs in both.
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
  }
  std::size_t hash() const;

 private:
  friend class PolyRing;
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::int32_t degree_ = 0;
  std::int32_t total_ = 0;
};

// Variables with positive integer weights and a graded monomial order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, std::vector<int> weights, Field field,
           OrderKind order = OrderKind::kGRevLex);

  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int weight(int i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  Field field() const { return field_; }
  OrderKind order() const { return order_; }
  std::optional<int> variable_index(std::string_view name) const;

  Monomial monomial(std::span<const int> exponents) const;
  Monomial variable(int i) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  std::vector<int> exponents(const Monomial& m) const;

  // Three-way comparison in the ring's order: weighted degree first.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
    if (order_ == OrderKind::kGRevLex) {
      for (int i = nvars_ - 1; i >= 0; --i) {
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? 1 : -1;
      }
    } else {
      for (int i = 0; i < nvars_; ++i) {
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i] ? 1 : -1;
      }
    }
    return 0;
  }

  // All monomials of the given weighted degree, in descending order.
  std::vector<Monomial> monomials_of_degree(int degree) const;

  std::string format(const Monomial& m) const;

  FieldElem zero() const { return FieldElem(field_, 0); }
  FieldElem one() const { return FieldElem(field_, 1); }
  FieldElem scalar(long v) const { return FieldElem(field_, v); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_ && a.field_ == b.field_ &&
           a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  Field field_;
  OrderKind order_;
  int nvars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial mono;
  FieldElem coeff;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const FieldElem& c);
  static Polynomial term(RingPtr ring, const Monomial& m, const FieldElem& c);
  static Polynomial variable(RingPtr ring, int i);
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring_ptr() const { return ring_; }
  const PolyRing& ring() const { return *ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  // Precondition: !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial operator+(const Polynomial& b) const;
  Polynomial operator-(const Polynomial& b) const;
  Polynomial operator*(const Polynomial& b) const;
  Polynomial operator-() const;
  Polynomial scaled(const FieldElem& c) const;
  Polynomial times_term(const Monomial& m, const FieldElem& c) const;
  Polynomial pow(unsigned e) const;

  bool is_homogeneous() const;
  // Weighted degree of a homogeneous polynomial; nullopt when inhomogeneous.
  // Throws AlgebraError on the zero polynomial.
  std::optional<int> degree() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& b) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Common weighted degree of all terms under `weights`, or nullopt if the
// polynomial is inhomogeneous for them. Throws on the zero polynomial.
std::optional<int> weighted_degree(const Polynomial& f, std::span<const int> weights);

// Parses `x^2*y + 3*y^3 - 1/2*x*y`. Parentheses and powers of parenthesised
// sums are accepted as well.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace gradua
