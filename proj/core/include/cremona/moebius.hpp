#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/algorithms.hpp"
#include "cremona/error.hpp"
#include "cremona/ratfunc.hpp"

namespace cremona {

/// Square roots and p-th roots in the two coefficient domains used here.
inline std::optional<FieldElement> root_of(const FieldElement& x, unsigned p) { return x.pth_root(p); }
inline std::optional<RatFunc> root_of(const RatFunc& x, unsigned p) { return pth_power_root(x, p); }

/// Embeds a base-field scalar into the coefficient domain S.
template <FieldLike S>
S embed(const FieldElement& c) {
  return S::from_base(c);
}

/// A 2x2 matrix, used unnormalized (for A^p = delta I tests and bases).
template <FieldLike S>
struct Mat2 {
  S a, b, c, d;

  static Mat2 identity(const Field& k) { return {S::one(k), S::zero(k), S::zero(k), S::one(k)}; }
  /// Columns u and v.
  static Mat2 columns(const std::pair<S, S>& u, const std::pair<S, S>& v) { return {u.first, v.first, u.second, v.second}; }

  S det() const { return a * d - b * c; }
  S trace() const { return a + d; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 scaled(const S& s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  std::pair<S, S> apply(const std::pair<S, S>& v) const { return {a * v.first + b * v.second, c * v.first + d * v.second}; }
  /// The scalar s when the matrix is s*I.
  std::optional<S> scalar() const {
    if (b.is_zero() && c.is_zero() && a == d) return a;
    return std::nullopt;
  }
  Mat2 pow(unsigned e) const {
    Mat2 r = identity(a.field());
    Mat2 base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }
};

/// Element of PGL_2 over S acting by z -> (a z + b)/(c z + d). The stored
/// representative has its first nonzero entry (in the order a, b, c, d)
/// equal to 1, so equality of maps is equality of entries.
template <FieldLike S>
class Moebius {
 public:
  Moebius(S a, S b, S c, S d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} { normalize(); }
  explicit Moebius(const Mat2<S>& m) : m_(m) { normalize(); }

  static Moebius identity(const Field& k) { return Moebius(Mat2<S>::identity(k)); }
  /// z -> lambda z.
  static Moebius scaling(const S& lambda) {
    const Field& k = lambda.field();
    return Moebius(lambda, S::zero(k), S::zero(k), S::one(k));
  }
  /// z -> delta / z.
  static Moebius inversion(const S& delta) {
    const Field& k = delta.field();
    return Moebius(S::zero(k), delta, S::one(k), S::zero(k));
  }
  /// z -> z + b.
  static Moebius translation(const S& b) {
    const Field& k = b.field();
    return Moebius(S::one(k), b, S::zero(k), S::one(k));
  }

  const S& a() const { return m_.a; }
  const S& b() const { return m_.b; }
  const S& c() const { return m_.c; }
  const S& d() const { return m_.d; }
  const Mat2<S>& matrix() const { return m_; }
  const Field& field() const { return m_.a.field(); }
  S det() const { return m_.det(); }

  /// Representative with c = 1 when c != 0, otherwise the normalized one.
  Mat2<S> unit_c_matrix() const {
    if (m_.c.is_zero()) return m_;
    return m_.scaled(S::one(field()) / m_.c);
  }

  bool is_identity() const { return m_.scalar().has_value(); }

  /// Composition: (f * g)(z) = f(g(z)).
  friend Moebius operator*(const Moebius& f, const Moebius& g) { return Moebius(f.m_ * g.m_); }
  Moebius inverse() const { return Moebius(m_.adjugate()); }
  Moebius pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return Moebius(m_.pow(static_cast<unsigned>(e)));
  }
  Moebius conjugate_by(const Moebius& g) const { return g * *this * g.inverse(); }

  /// Value at a finite point that is not a pole.
  S operator()(const S& z) const {
    S den = m_.c * z + m_.d;
    if (den.is_zero()) fail(ErrorKind::DivisionByZero, "moebius", "evaluation at the pole of a homography");
    return (m_.a * z + m_.b) / den;
  }

  /// The map as a rational function of its variable.
  RationalFunction<S> as_function() const {
    const Field& k = field();
    return RationalFunction<S>(Poly<S>(k, {m_.b, m_.a}), Poly<S>(k, {m_.d, m_.c}));
  }

  friend bool operator==(const Moebius& f, const Moebius& g) {
    return f.m_.a == g.m_.a && f.m_.b == g.m_.b && f.m_.c == g.m_.c && f.m_.d == g.m_.d;
  }

  std::string to_string(const std::string& var = "z", const std::string& inner = "") const {
    return as_function().to_string(var, inner);
  }

 private:
  void normalize() {
    if (m_.det().is_zero()) fail(ErrorKind::InvalidInput, "moebius", "singular matrix does not define a homography");
    const S* lead = nullptr;
    for (const S* e : {&m_.a, &m_.b, &m_.c, &m_.d}) {
      if (!e->is_zero()) {
        lead = e;
        break;
      }
    }
    if (lead->is_one()) return;
    const S inv = S::one(field()) / *lead;
    m_ = m_.scaled(inv);
  }

  Mat2<S> m_;
};

using KMoebius = Moebius<FieldElement>;
using KtMoebius = Moebius<RatFunc>;

/// Least n <= bound with A^n scalar, or nothing.
template <FieldLike S>
std::optional<unsigned> projective_order(const Moebius<S>& a, unsigned bound) {
  if (bound < 1) fail(ErrorKind::InvalidInput, "moebius", "order bound must be positive");
  Mat2<S> acc = a.matrix();
  for (unsigned n = 1; n <= bound; ++n) {
    if (acc.scalar()) return n;
    acc = acc * a.matrix();
  }
  return std::nullopt;
}

template <FieldLike S>
struct CpConjugation {
  Moebius<S> g;       // g A g^-1 = (z -> zeta^exponent z)
  unsigned exponent;  // zeta = base field's primitive_root_of_unity(p)
};

namespace detail {

template <FieldLike S>
std::pair<S, S> normalized_vector(std::pair<S, S> v) {
  const S& lead = v.first.is_zero() ? v.second : v.first;
  const S inv = S::one(lead.field()) / lead;
  return {v.first * inv, v.second * inv};
}

/// A nonzero vector in ker(B - e I); B must not be e I.
template <FieldLike S>
std::pair<S, S> eigenvector(const Mat2<S>& b, const S& e) {
  std::pair<S, S> v{b.b, e - b.a};
  if (v.first.is_zero() && v.second.is_zero()) v = {e - b.d, b.c};
  if (v.first.is_zero() && v.second.is_zero()) fail(ErrorKind::Internal, "moebius", "eigenvector of a scalar matrix");
  return normalized_vector(v);
}

template <FieldLike S>
bool is_eigenvector(const Mat2<S>& a, const std::pair<S, S>& v) {
  auto w = a.apply(v);
  return (v.first * w.second - v.second * w.first).is_zero();
}

}  // namespace detail

/// Diagonalizes an element of odd prime order p: returns g with
/// g A g^-1 = (z -> zeta^a z).
template <FieldLike S>
CpConjugation<S> conjugate_to_Cp(const Moebius<S>& a, unsigned p) {
  const Field& k = a.field();
  if (p < 3 || p % 2 == 0) fail(ErrorKind::InvalidInput, "moebius", "conjugate_to_Cp needs an odd prime");
  if (a.is_identity()) fail(ErrorKind::PreconditionFailed, "moebius", "element is scalar");
  const Mat2<S>& m = a.matrix();
  auto delta = m.pow(p).scalar();
  if (!delta) fail(ErrorKind::WrongOrder, "moebius", "A^p is not scalar");
  auto zeta = k.primitive_root_of_unity(p);
  if (!zeta) {
    fail(ErrorKind::RequiresFieldExtension, "moebius", "base field has no primitive " + std::to_string(p) + "-th root of unity");
  }
  // det(A)^p = delta^2, so rho = det^((p+1)/2) / delta satisfies rho^p = delta.
  const S rho = m.det().pow((p + 1) / 2) / *delta;
  if (!(rho.pow(p) == *delta)) fail(ErrorKind::Internal, "moebius", "p-th root of the scalar A^p failed");
  const Mat2<S> b = m.scaled(S::one(k) / rho);

  std::vector<std::pair<unsigned, std::pair<S, S>>> eig;
  FieldElement z = k.one();
  for (unsigned i = 0; i < p && eig.size() < 2; ++i, z *= *zeta) {
    const S e = embed<S>(z);
    const Mat2<S> shifted{b.a - e, b.b, b.c, b.d - e};
    if (shifted.det().is_zero()) eig.emplace_back(i, detail::eigenvector(b, e));
  }
  if (eig.size() != 2) fail(ErrorKind::PreconditionFailed, "moebius", "eigenvalues of A/rho are not p-th roots of unity in k");
  // Keep the coordinate axes in place when A is already diagonal.
  if (eig[1].second.second.is_zero() || eig[0].second.first.is_zero()) std::swap(eig[0], eig[1]);
  const Mat2<S> basis = Mat2<S>::columns(eig[0].second, eig[1].second);
  const unsigned exponent = (eig[0].first + p - eig[1].first) % p;
  return {Moebius<S>(basis.adjugate()), exponent};
}

template <FieldLike S>
struct InversionConjugation {
  Moebius<S> g;  // g A g^-1 = (z -> delta / z)
  S delta;
};

/// For an involution A: g built from a basis (v, Av).
template <FieldLike S>
InversionConjugation<S> conjugate_to_inversion(const Moebius<S>& a) {
  const Field& k = a.field();
  if (a.is_identity()) fail(ErrorKind::PreconditionFailed, "moebius", "element is scalar");
  const Mat2<S> m = a.unit_c_matrix();
  auto delta = (m * m).scalar();
  if (!delta) fail(ErrorKind::NotInvolution, "moebius", "A^2 is not scalar");
  const std::pair<S, S> candidates[] = {
      {S::one(k), S::zero(k)}, {S::zero(k), S::one(k)}, {S::one(k), S::one(k)}};
  for (const auto& v : candidates) {
    if (detail::is_eigenvector(m, v)) continue;
    const Mat2<S> basis = Mat2<S>::columns(v, m.apply(v));
    return {Moebius<S>(basis.adjugate()), *delta};
  }
  fail(ErrorKind::Internal, "moebius", "no cyclic vector for a nonscalar involution");
}

/// Checks that four homographies form a Klein four-group.
template <FieldLike S>
void require_klein(const std::vector<Moebius<S>>& g) {
  if (g.size() != 4) fail(ErrorKind::InvalidInput, "moebius", "a Klein four-group has four elements");
  int identities = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (g[i].is_identity()) ++identities;
    if (!(g[i] * g[i]).is_identity()) fail(ErrorKind::NotInvolution, "moebius", "element of order other than 2");
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j && g[i] == g[j]) fail(ErrorKind::InvalidInput, "moebius", "repeated element");
      if (!(g[i] * g[j] == g[j] * g[i])) fail(ErrorKind::NonCommuting, "moebius", "elements do not commute");
      const Moebius<S> prod = g[i] * g[j];
      bool found = false;
      for (const auto& h : g) found = found || h == prod;
      if (!found) fail(ErrorKind::InvalidInput, "moebius", "set is not closed under composition");
    }
  }
  if (identities != 1) fail(ErrorKind::InvalidInput, "moebius", "group must contain the identity once");
}

/// Conjugates a Klein four-group onto V_delta = {z, -z, delta/z, -delta/z}.
/// The element sent to z -> -z is the first one (input order) whose square
/// is a square scalar; the next remaining element supplies delta.
template <FieldLike S>
InversionConjugation<S> klein_to_Vdelta(const std::vector<Moebius<S>>& group) {
  require_klein(group);
  std::vector<const Moebius<S>*> nontrivial;
  for (const auto& g : group) {
    if (!g.is_identity()) nontrivial.push_back(&g);
  }
  for (std::size_t i = 0; i < nontrivial.size(); ++i) {
    const Mat2<S> b = nontrivial[i]->unit_c_matrix();
    const S beta = *(b * b).scalar();
    auto r = root_of(beta, 2);
    if (!r) continue;
    const Moebius<S>& other = *nontrivial[i == 0 ? 1 : 0];
    const Mat2<S> a = other.unit_c_matrix();
    const S delta = *(a * a).scalar();
    const auto u = detail::eigenvector(b, *r);
    const Mat2<S> basis = Mat2<S>::columns(u, a.apply(u));
    return {Moebius<S>(basis.adjugate()), delta};
  }
  fail(ErrorKind::RequiresFieldExtension, "moebius",
       "no element of the Klein group is diagonalizable over the coefficient field");
}

}  // namespace cremona
