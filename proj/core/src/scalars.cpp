#include "gradua/scalars.hpp"

#include <charconv>
#include <string>

namespace gradua {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw FieldError("field modulus " + std::to_string(p) +
                     " is not a prime below 2^31");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp:")) {
    digits = text.substr(3);
  } else if (text.starts_with("ZZ/")) {
    digits = text.substr(3);
  } else {
    throw FieldError("unknown field '" + std::string(text) + "'");
  }
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw FieldError("bad field modulus in '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(modulus_);
}

FieldElem::FieldElem(Field f, long value) : value_(value), field_(f) { reduce(); }

FieldElem::FieldElem(Field f, const mpq_class& value) : value_(value), field_(f) {
  reduce();
}

FieldElem FieldElem::parse(Field f, std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw FieldError("bad coefficient '" + std::string(text) + "'");
  }
  if (sgn(q.get_den()) == 0) throw FieldError("division by zero in coefficient");
  q.canonicalize();
  return FieldElem(f, q);
}

void FieldElem::reduce() {
  if (field_.is_rational()) return;
  const unsigned long p = field_.characteristic();
  mpz_class num = value_.get_num();
  mpz_class den = value_.get_den();
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), p);
  if (den != 1) {
    mpz_class d;
    mpz_fdiv_r_ui(d.get_mpz_t(), den.get_mpz_t(), p);
    if (d == 0) throw FieldError("denominator vanishes in " + field_.to_string());
    mpz_class inv;
    mpz_class pz(p);
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
    r = r * inv;
    mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p);
  }
  value_ = mpq_class(r);
}

void FieldElem::check_same(const FieldElem& b) const {
  if (!(field_ == b.field_)) {
    throw FieldError("mixed fields: " + field_.to_string() + " and " +
                     b.field_.to_string());
  }
}

FieldElem FieldElem::operator+(const FieldElem& b) const {
  check_same(b);
  FieldElem r;
  r.field_ = field_;
  r.value_ = value_ + b.value_;
  if (!field_.is_rational() && r.value_ >= field_.characteristic()) {
    r.value_ -= field_.characteristic();
  }
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& b) const {
  check_same(b);
  FieldElem r;
  r.field_ = field_;
  r.value_ = value_ - b.value_;
  if (!field_.is_rational() && sgn(r.value_) < 0) {
    r.value_ += field_.characteristic();
  }
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& b) const {
  check_same(b);
  FieldElem r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.value_ = value_ * b.value_;
  } else {
    mpz_class prod = value_.get_num() * b.value_.get_num();
    mpz_fdiv_r_ui(prod.get_mpz_t(), prod.get_mpz_t(), field_.characteristic());
    r.value_ = mpq_class(prod);
  }
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  FieldElem r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.value_ = 1 / value_;
  } else {
    mpz_class inv;
    mpz_class pz(field_.characteristic());
    mpz_class num = value_.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    r.value_ = mpq_class(inv);
  }
  return r;
}

FieldElem FieldElem::operator/(const FieldElem& b) const {
  check_same(b);
  return *this * b.inverse();
}

FieldElem FieldElem::operator-() const {
  FieldElem r;
  r.field_ = field_;
  if (is_zero()) return r;
  r.value_ = field_.is_rational() ? mpq_class(-value_)
                                  : mpq_class(field_.characteristic() - value_);
  return r;
}

std::string FieldElem::to_string() const { return value_.get_str(); }

std::size_t FieldElem::hash() const {
  std::size_t h = std::hash<std::string>()(value_.get_str(16));
  return h ^ (static_cast<std::size_t>(field_.characteristic()) * 0x9e3779b97f4a7c15ull);
}

}  // namespace gradua
