#include "gradua/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>

namespace gradua {

std::string to_string(OrderKind k) { return k == OrderKind::kGRevLex ? "grevlex" : "glex"; }

OrderKind parse_order_kind(std::string_view s) {
  if (s == "grevlex") return OrderKind::kGRevLex;
  if (s == "glex" || s == "lex") return OrderKind::kGLex;
  throw AlgebraError("unknown monomial order '" + std::string(s) + "'");
}

Monomial Monomial::operator*(const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) {
    int e = exps_[i] + b.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) {
      throw AlgebraError("exponent overflow");
    }
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + b.degree_;
  r.total_ = total_ + b.total_;
  return r;
}

Monomial Monomial::operator/(const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - b.exps_[i]);
  }
  r.degree_ = degree_ - b.degree_;
  r.total_ = total_ - b.total_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

PolyRing::PolyRing(std::vector<std::string> names, std::vector<int> weights, Field field,
                   OrderKind order)
    : names_(std::move(names)), weights_(std::move(weights)), field_(field), order_(order) {
  if (names_.size() != weights_.size()) {
    throw AlgebraError("variable names and weights differ in length");
  }
  if (names_.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw AlgebraError("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] <= 0) {
      throw AlgebraError("variable '" + names_[i] + "' has nonpositive weight");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw AlgebraError("duplicate variable '" + names_[i] + "'");
    }
  }
  nvars_ = static_cast<int>(names_.size());
}

std::optional<int> PolyRing::variable_index(std::string_view name) const {
  for (int i = 0; i < nvars_; ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Monomial PolyRing::monomial(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != nvars_) {
    throw AlgebraError("exponent vector length does not match variable count");
  }
  Monomial m;
  for (int i = 0; i < nvars_; ++i) {
    if (exponents[i] < 0 || exponents[i] > std::numeric_limits<std::uint16_t>::max()) {
      throw AlgebraError("exponent out of range");
    }
    m.exps_[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree_ += exponents[i] * weights_[i];
    m.total_ += exponents[i];
  }
  return m;
}

Monomial PolyRing::variable(int i) const {
  Monomial m;
  m.exps_[i] = 1;
  m.degree_ = weights_[i];
  m.total_ = 1;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < nvars_; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i] * weights_[i];
    m.total_ += m.exps_[i];
  }
  return m;
}

std::vector<int> PolyRing::exponents(const Monomial& m) const {
  std::vector<int> e(nvars_);
  for (int i = 0; i < nvars_; ++i) e[i] = m.exps_[i];
  return e;
}

std::vector<Monomial> PolyRing::monomials_of_degree(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> e(nvars_, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars_) {
      if (left == 0) out.push_back(monomial(e));
      return;
    }
    for (int k = 0; k * weights_[var] <= left; ++k) {
      e[var] = k;
      rec(var + 1, left - k * weights_[var]);
    }
    e[var] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(),
            [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

std::string PolyRing::format(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars_; ++i) {
    if (m.exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names_[i];
    if (m.exps_[i] > 1) s += '^' + std::to_string(m.exps_[i]);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(RingPtr ring, const FieldElem& c) {
  return term(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const FieldElem& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  Monomial m = ring->variable(i);
  FieldElem one = ring->one();
  return term(std::move(ring), m, one);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& R = *ring;
  std::sort(terms.begin(), terms.end(),
            [&R](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void Polynomial::check_ring(const Polynomial& b) const {
  if (ring_ && b.ring_ && ring_ != b.ring_ && !(*ring_ == *b.ring_)) {
    throw AlgebraError("polynomials live in different rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& b) const {
  check_ring(b);
  Polynomial r(ring_ ? ring_ : b.ring_);
  if (!r.ring_) return r;
  const PolyRing& R = *r.ring_;
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    int c = (i == terms_.end()) ? -1 : (j == b.terms_.end()) ? 1 : R.compare(i->mono, j->mono);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.push_back(*j++);
    } else {
      FieldElem s = i->coeff + j->coeff;
      if (!s.is_zero()) r.terms_.push_back({i->mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& b) const { return *this + (-b); }

Polynomial Polynomial::scaled(const FieldElem& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElem& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& b) const {
  check_ring(b);
  Polynomial r(ring_ ? ring_ : b.ring_);
  if (is_zero() || b.is_zero()) return r;
  std::vector<Term> all;
  all.reserve(terms_.size() * b.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : b.terms_) all.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return from_terms(r.ring_, std::move(all));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, ring_->one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

std::optional<int> Polynomial::degree() const {
  if (is_zero()) throw AlgebraError("degree of the zero polynomial is undefined");
  if (!is_homogeneous()) return std::nullopt;
  return terms_.front().mono.degree();
}

std::optional<int> weighted_degree(const Polynomial& f, std::span<const int> weights) {
  if (f.is_zero()) throw AlgebraError("degree of the zero polynomial is undefined");
  const PolyRing& R = f.ring();
  if (static_cast<int>(weights.size()) != R.num_vars()) {
    throw AlgebraError("weight vector length does not match variable count");
  }
  std::optional<int> deg;
  for (const auto& t : f.terms()) {
    int d = 0;
    for (int i = 0; i < R.num_vars(); ++i) d += t.mono.exponent(i) * weights[i];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    FieldElem c = t.coeff;
    bool negative = c.field().is_rational() && c.sign() < 0;
    if (negative) c = -c;
    if (k == 0) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono = ring_->format(t.mono);
    if (t.mono.is_one()) {
      s += c.to_string();
    } else if (c.is_one()) {
      s += mono;
    } else {
      s += c.to_string() + "*" + mono;
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial: " + msg + " at offset " + std::to_string(pos_), pos_);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  unsigned exponent() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    Polynomial base;
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t ds = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        num += "/" + std::string(text_.substr(ds, pos_ - ds));
      }
      FieldElem v = FieldElem::parse(ring_->field(), num);
      base = Polynomial::constant(ring_, v);
    } else if (std::islower(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->variable_index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      base = Polynomial::variable(ring_, *idx);
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (accept('^')) base = base.pow(exponent());
    return base;
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

}  // namespace gradua
