#pragma once

// Exact coefficient fields: the rationals and prime fields Z/p.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gradua {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Descriptor of a coefficient field. A modulus of zero denotes Q.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field(); }
  // Throws FieldError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  // Accepts "Q", "QQ", "Fp:<p>" or "ZZ/<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t characteristic() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(Field a, Field b) { return a.modulus_ == b.modulus_; }

 private:
  explicit constexpr Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

// An element of a Field. Rationals are kept canonical (lowest terms, positive
// denominator) by GMP; prime-field values are integers in [0, p).
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Field f, long value);
  FieldElem(Field f, const mpq_class& value);
  // Parses "3", "-2", "7/4". For prime fields the fraction is mapped to Z/p.
  static FieldElem parse(Field f, std::string_view text);

  Field field() const { return field_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  // Sign of the canonical representative (prime fields: 0 or +1).
  int sign() const { return sgn(value_); }

  FieldElem operator+(const FieldElem& b) const;
  FieldElem operator-(const FieldElem& b) const;
  FieldElem operator*(const FieldElem& b) const;
  FieldElem operator/(const FieldElem& b) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  FieldElem inverse() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void check_same(const FieldElem& b) const;
  void reduce();

  mpq_class value_;
  Field field_;
};

}  // namespace gradua
