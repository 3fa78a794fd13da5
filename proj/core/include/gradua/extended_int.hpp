#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace gradua {

// An integer or +infinity. Used for initial degrees and v-numbers, where the
// zero module is assigned infinity.
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;  // infinity
  constexpr ExtendedInt(long v) : value_(v), finite_(true) {}  // NOLINT

  static constexpr ExtendedInt infinity() { return ExtendedInt(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }
  // Precondition: is_finite().
  constexpr long value() const { return value_; }

  friend constexpr bool operator==(ExtendedInt a, ExtendedInt b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedInt a, ExtendedInt b) {
    if (!a.finite_ || !b.finite_) {
      return static_cast<int>(a.finite_ ? 0 : 1) <=> static_cast<int>(b.finite_ ? 0 : 1);
    }
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }
  friend std::ostream& operator<<(std::ostream& os, ExtendedInt x) {
    return os << x.to_string();
  }

 private:
  long value_ = 0;
  bool finite_ = false;
};

inline ExtendedInt minimum(ExtendedInt a, ExtendedInt b) { return a <= b ? a : b; }

}  // namespace gradua
