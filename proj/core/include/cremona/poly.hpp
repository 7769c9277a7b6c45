#pragma once

#include <concepts>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"

namespace cremona {

/// Scalar types the polynomial machinery runs over: base field elements and
/// rational functions over them (k(t), k(t)(s), ...). All are built from a
/// base Field handle.
template <class F>
concept FieldLike = requires(const F& a, const F& b, const Field& k) {
  { F::zero(k) } -> std::same_as<F>;
  { F::one(k) } -> std::same_as<F>;
  { F::from_int(k, 1LL) } -> std::same_as<F>;
  { a.field() } -> std::convertible_to<Field>;
  { a.is_zero() } -> std::same_as<bool>;
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a == b } -> std::same_as<bool>;
  { a.to_string() } -> std::same_as<std::string>;
  { a.is_atomic() } -> std::same_as<bool>;
};

/// Dense univariate polynomial with coefficients in F, stored in ascending
/// order with no trailing zeros. The zero polynomial has no coefficients and
/// degree -1.
template <FieldLike F>
class Poly {
 public:
  explicit Poly(Field k) : field_(std::move(k)) {}
  Poly(Field k, std::vector<F> coeffs) : field_(std::move(k)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& c) { return Poly(c.field(), {c}); }
  static Poly variable(const Field& k) { return Poly(k, {F::zero(k), F::one(k)}); }
  static Poly monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, F::zero(c.field()));
    v[k] = c;
    return Poly(c.field(), std::move(v));
  }
  /// Builds from small integer coefficients, ascending.
  static Poly from_ints(const Field& k, std::initializer_list<long long> ints) {
    std::vector<F> v;
    for (long long i : ints) v.push_back(F::from_int(k, i));
    return Poly(k, std::move(v));
  }

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coefficients() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F::zero(field_); }
  const F& leading() const {
    if (c_.empty()) fail(ErrorKind::InvalidInput, "exactfield", "zero polynomial has no leading coefficient");
    return c_.back();
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& b) {
    if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), F::zero(field_));
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = c_[i] + b.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& b) { return *this += -b; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(a.field_, std::move(r));
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const F& s) const {
    if (s.is_zero()) return Poly(field_);
    Poly r(*this);
    for (auto& c : r.c_) c = c * s;
    return r;
  }

  /// Euclidean division; throws on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "exactfield", "polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(a.field_), rem};
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<F> quot(a.c_.size() - db, F::zero(a.field_));
    const F inv_lead = F::one(a.field_) / b.c_.back();
    for (std::size_t i = rem.c_.size(); i-- > db;) {
      if (i >= rem.c_.size() || rem.c_[i].is_zero()) continue;
      F c = rem.c_[i] * inv_lead;
      quot[i - db] = c;
      for (std::size_t j = 0; j <= db; ++j) rem.c_[i - db + j] = rem.c_[i - db + j] - c * b.c_[j];
    }
    rem.trim();
    return {Poly(a.field_, std::move(quot)), rem};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(F::one(field_) / leading());
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<F> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * F::from_int(field_, static_cast<long long>(i)));
    return Poly(field_, std::move(r));
  }

  /// Horner evaluation over any ring-compatible argument (scalars of F, or
  /// elements of an extension such as rational functions).
  template <class X>
  X evaluate(const X& x, const X& zero) const {
    X acc = zero;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i], zero);
    return acc;
  }
  F operator()(const F& x) const { return evaluate<F>(x, F::zero(field_)); }

  Poly compose(const Poly& g) const { return evaluate<Poly>(g, Poly(field_)); }

  Poly pow(unsigned e) const {
    Poly r = constant(F::one(field_));
    Poly b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// x^n * p(1/x) for a formal degree n >= degree().
  Poly reciprocal(std::size_t formal_degree) const {
    if (degree() > static_cast<int>(formal_degree)) {
      fail(ErrorKind::InvalidInput, "exactfield", "formal degree below actual degree");
    }
    std::vector<F> r(formal_degree + 1, F::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[formal_degree - i] = c_[i];
    return Poly(field_, std::move(r));
  }

  /// p(-x).
  Poly negate_variable() const {
    Poly r(*this);
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  /// Human/parser text in the variable `var`, highest degree first. `inner`
  /// names the variable of rational-function coefficients.
  std::string to_string(const std::string& var = "x", const std::string& inner = "") const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const F& c = c_[i];
      if (c.is_zero()) continue;
      std::string cs = coefficient_text(c, inner);
      bool negative = c.is_atomic() && !cs.empty() && cs[0] == '-';
      if (negative) cs = cs.substr(1);
      if (!first) out << (negative ? " - " : " + ");
      else if (negative) out << "-";
      first = false;
      const bool unit = cs == "1";
      if (i == 0) {
        out << (c.is_atomic() ? cs : "(" + cs + ")");
        continue;
      }
      if (!unit) out << (c.is_atomic() ? cs : "(" + cs + ")") << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    return out.str();
  }

 private:
  static std::string coefficient_text(const F& c, const std::string& inner) {
    if constexpr (requires { c.to_string(inner); }) {
      if (!inner.empty()) return c.to_string(inner);
    }
    return c.to_string();
  }

  template <class X>
  static X lift(const F& c, const X& zero) {
    (void)zero;
    if constexpr (std::is_same_v<X, F>) {
      return c;
    } else if constexpr (std::is_same_v<X, Poly>) {
      return Poly::constant(c);
    } else if constexpr (requires { X::constant(c); }) {
      return X::constant(c);
    } else {
      return X::from_base(c);
    }
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Field field_;
  std::vector<F> c_;
};

/// Monic gcd (zero when both inputs vanish).
template <FieldLike F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return a.monic();
  if (b.degree() == 0) return Poly<F>::constant(F::one(a.field()));
  // Monic remainders keep rational coefficients from growing.
  b = b.monic();
  while (!b.is_zero()) {
    Poly<F> r = (a % b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace cremona
