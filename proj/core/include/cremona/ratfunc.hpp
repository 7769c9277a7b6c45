#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

/// Reduced quotient num/den of polynomials over F: gcd(num, den) = 1 and den
/// monic, so equal functions have equal representations.
template <FieldLike F>
class RationalFunction {
 public:
  explicit RationalFunction(const Poly<F>& num) : num_(num), den_(Poly<F>::constant(F::one(num.field()))) {}
  RationalFunction(const Poly<F>& num, const Poly<F>& den) : num_(num), den_(den) { normalize(); }

  static RationalFunction zero(const Field& k) { return RationalFunction(Poly<F>(k)); }
  static RationalFunction one(const Field& k) { return constant(F::one(k)); }
  static RationalFunction from_int(const Field& k, long long v) { return constant(F::from_int(k, v)); }
  static RationalFunction constant(const F& c) { return RationalFunction(Poly<F>::constant(c)); }
  static RationalFunction from_base(const FieldElement& c) {
    if constexpr (std::is_same_v<F, FieldElement>) {
      return constant(c);
    } else {
      return constant(F::from_base(c));
    }
  }
  /// The generator of this function field over F.
  static RationalFunction variable(const Field& k) { return RationalFunction(Poly<F>::variable(k)); }

  const Field& field() const { return num_.field(); }
  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_ == den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant function.
  F constant_value() const {
    if (!is_constant()) fail(ErrorKind::InvalidInput, "exactfield", "rational function is not constant");
    return num_.coeff(0);
  }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Reduced{}); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.field());
    // Cross-cancel first to keep intermediate degrees low.
    Poly<F> g1 = gcd(a.num_, b.den_);
    Poly<F> g2 = gcd(b.num_, a.den_);
    Poly<F> n = (g1.degree() > 0 ? a.num_ / g1 : a.num_) * (g2.degree() > 0 ? b.num_ / g2 : b.num_);
    Poly<F> d = (g2.degree() > 0 ? a.den_ / g2 : a.den_) * (g1.degree() > 0 ? b.den_ / g1 : b.den_);
    RationalFunction r(std::move(n), std::move(d), Reduced{});
    r.make_den_monic();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  RationalFunction inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "exactfield", "inverse of the zero rational function");
    return RationalFunction(den_, num_);
  }

  RationalFunction pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{});
  }

  /// d/dvar by the quotient rule.
  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// Value at a point of F; throws at a pole.
  F operator()(const F& x) const {
    F d = den_(x);
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "exactfield", "evaluation at a pole");
    return num_(x) / d;
  }

  /// this(g): substitutes the rational function g for the variable.
  RationalFunction compose(const RationalFunction& g) const {
    // With g = p/q and n = deg f: f(p/q) = sum f_i p^i q^(n-i) / q^n.
    const int dn = num_.degree(), dd = den_.degree();
    if (dn <= 0 && dd <= 0) return *this;
    const int top = std::max(dn, dd);
    std::vector<Poly<F>> qpow{Poly<F>::constant(F::one(field()))};
    for (int i = 1; i <= top; ++i) qpow.push_back(qpow.back() * g.den_);
    auto homogenize = [&](const Poly<F>& f) {
      const int n = f.degree();
      if (n < 0) return Poly<F>(field());
      Poly<F> acc = Poly<F>::constant(f.coeff(static_cast<std::size_t>(n)));
      for (int i = n - 1; i >= 0; --i) {
        acc = acc * g.num_ + qpow[static_cast<std::size_t>(n - i)].scaled(f.coeff(static_cast<std::size_t>(i)));
      }
      return acc;
    };
    Poly<F> n = homogenize(num_);
    Poly<F> d = homogenize(den_);
    if (dd > dn) n *= qpow[static_cast<std::size_t>(dd - std::max(dn, 0))];
    if (dn > dd) d *= qpow[static_cast<std::size_t>(dn - std::max(dd, 0))];
    return RationalFunction(n, d);
  }

  /// f(-t).
  RationalFunction negate_variable() const {
    return RationalFunction(num_.negate_variable(), den_.negate_variable());
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "t", const std::string& inner = "") const {
    if (den_.degree() == 0) return num_.to_string(var, inner);
    std::string n = num_.to_string(var, inner);
    std::string d = den_.to_string(var, inner);
    if (terms(num_) > 1) n = "(" + n + ")";
    if (terms(den_) > 1) d = "(" + d + ")";
    return n + "/" + d;
  }
  /// Constants that print as a single signed atom.
  bool is_atomic() const { return is_constant() && (num_.is_zero() || num_.leading().is_atomic()); }

 private:
  struct Reduced {};
  static std::size_t terms(const Poly<F>& p) {
    std::size_t n = 0;
    for (const auto& c : p.coefficients()) n += c.is_zero() ? 0 : 1;
    return n;
  }
  RationalFunction(Poly<F> num, Poly<F> den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void make_den_monic() {
    F lead = den_.leading();
    if (!(lead == F::one(field()))) {
      F inv = F::one(field()) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  void normalize() {
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "exactfield", "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<F>::constant(F::one(field()));
      return;
    }
    Poly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    make_den_monic();
  }

  Poly<F> num_;
  Poly<F> den_;
};

/// k(t): rational functions over the base field.
using RatFunc = RationalFunction<FieldElement>;
/// k(s)(t): used for identities in two variables; the inner variable lives
/// in the coefficients.
using BiRatFunc = RationalFunction<RatFunc>;

/// Partial derivative of a k(s)(t) element with respect to the inner
/// variable s.
BiRatFunc inner_derivative(const BiRatFunc& f);

}  // namespace cremona
