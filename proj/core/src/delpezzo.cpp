#include "cremona/delpezzo.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

namespace cremona {
namespace {

constexpr const char* kModule = "delpezzo";

// a + b eps with eps^2 = 0.
struct Dual {
  FieldElement a, b;
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
  friend Dual operator/(const Dual& x, const Dual& y) {
    const FieldElement inv = y.a.inverse();
    return {x.a * inv, (x.b * y.a - x.a * y.b) * inv * inv};
  }
};

Dual constant(const FieldElement& c) { return {c, c.field().zero()}; }

Dual jfun_dual(const Dual& x) {
  const Field& k = x.a.field();
  const Dual one = constant(k.one());
  const Dual q = x * x - x + one;
  const Dual xm1 = x - one;
  return constant(k.from_int(256)) * q * q * q / (x * x * xm1 * xm1);
}

template <class T>
T eval_poly(const KPoly& f, const T& x, const T& zero, auto lift) {
  T r = zero;
  for (std::size_t i = f.coefficients().size(); i-- > 0;) r = r * x + lift(f.coeff(i));
  return r;
}

// Dense polynomial in (l, m): c[i][j] is the coefficient of l^i m^j.
struct BiPoly {
  const Field* k;
  std::vector<std::vector<FieldElement>> c;

  static BiPoly constant(const Field& f, const FieldElement& v) { return {&f, {{v}}}; }
  static BiPoly var(const Field& f, unsigned which) {
    BiPoly r{&f, {{f.zero(), f.zero()}, {f.zero(), f.zero()}}};
    (which == 0 ? r.c[1][0] : r.c[0][1]) = f.one();
    return r;
  }
  std::size_t rows() const { return c.size(); }
  std::size_t cols() const { return c.empty() ? 0 : c[0].size(); }
  BiPoly resized(std::size_t r, std::size_t s) const {
    BiPoly out{k, std::vector<std::vector<FieldElement>>(r, std::vector<FieldElement>(s, k->zero()))};
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) out.c[i][j] = c[i][j];
    }
    return out;
  }
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a.resized(std::max(a.rows(), b.rows()), std::max(a.cols(), b.cols()));
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) r.c[i][j] += b.c[i][j];
    }
    return r;
  }
  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& row : r.c) {
      for (auto& v : row) v = -v;
    }
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r = BiPoly{a.k, {}}.resized(a.rows() + b.rows() - 1, a.cols() + b.cols() - 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.c[i][j].is_zero()) continue;
        for (std::size_t u = 0; u < b.rows(); ++u) {
          for (std::size_t v = 0; v < b.cols(); ++v) {
            if (!b.c[u][v].is_zero()) r.c[i + u][j + v] += a.c[i][j] * b.c[u][v];
          }
        }
      }
    }
    return r;
  }
  BiPoly partial(unsigned which) const {
    BiPoly r = BiPoly{k, {}}.resized(rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) {
        const std::size_t e = which == 0 ? i : j;
        if (e == 0) continue;
        (which == 0 ? r.c[i - 1][j] : r.c[i][j - 1]) = c[i][j] * k->from_int(static_cast<long long>(e));
      }
    }
    return r;
  }
  bool is_zero() const {
    for (const auto& row : c) {
      for (const auto& v : row) {
        if (!v.is_zero()) return false;
      }
    }
    return true;
  }
};

// Unreduced quotient; equality by cross-multiplication.
struct BiFrac {
  BiPoly n, d;
  friend BiFrac operator*(const BiFrac& a, const BiFrac& b) { return {a.n * b.n, a.d * b.d}; }
  friend BiFrac operator-(const BiFrac& a, const BiFrac& b) {
    if (a.d.c == b.d.c) return {a.n - b.n, a.d};
    return {a.n * b.d - b.n * a.d, a.d * b.d};
  }
  BiFrac partial(unsigned which) const { return {n.partial(which) * d - n * d.partial(which), d * d}; }
  friend bool operator==(const BiFrac& a, const BiFrac& b) { return (a.n * b.d - b.n * a.d).is_zero(); }
};

// f(p/q) for f = N/D in k(x), homogenized to N_h(p, q) / D_h(p, q).
BiFrac compose_bi(const RatFunc& f, const BiPoly& p, const BiPoly& q) {
  const Field& k = *p.k;
  const int deg = std::max(f.num().degree(), f.den().degree());
  std::vector<BiPoly> pp{BiPoly::constant(k, k.one())}, qq{BiPoly::constant(k, k.one())};
  for (int i = 0; i < deg; ++i) {
    pp.push_back(pp.back() * p);
    qq.push_back(qq.back() * q);
  }
  auto homog = [&](const KPoly& g) {
    BiPoly r = BiPoly::constant(k, k.zero());
    for (int i = 0; i <= g.degree(); ++i) {
      r = r + BiPoly::constant(k, g.coeff(static_cast<std::size_t>(i))) * pp[i] * qq[deg - i];
    }
    return r;
  };
  return {homog(f.num()), homog(f.den())};
}

FieldElement eval_rat(const RatFunc& f, const FieldElement& x) { return f(x); }

}  // namespace

QuarticDP::QuarticDP(std::array<FieldElement, 5> lambdas) : lambdas_(std::move(lambdas)) {
  const Field& k = lambdas_[0].field();
  if (k.characteristic() == 2) fail(ErrorKind::Unsupported, kModule, "characteristic 2");
  for (std::size_t i = 0; i < 5; ++i) {
    if (!(lambdas_[i].field() == k)) fail(ErrorKind::FieldMismatch, kModule, "pencil parameters from different fields");
    for (std::size_t j = 0; j < i; ++j) {
      if (lambdas_[i] == lambdas_[j]) fail(ErrorKind::InvalidInput, kModule, "repeated pencil parameter: surface singular");
    }
  }
}

DiagInvolution::DiagInvolution(unsigned mask) : mask_(mask & 31u) {
  if (std::popcount(mask_) > 2) mask_ ^= 31u;
}

DiagInvolution DiagInvolution::reflection(unsigned l) {
  if (l > 4) fail(ErrorKind::InvalidInput, kModule, "coordinate index out of range");
  return DiagInvolution(1u << l);
}

std::pair<unsigned, unsigned> DiagInvolution::eigenspace_dims() const {
  const unsigned minus = static_cast<unsigned>(std::popcount(mask_));
  return {5 - minus, minus};
}

std::string DiagInvolution::to_string() const {
  std::string s = "(";
  for (unsigned i = 0; i < 5; ++i) s += std::string(i ? "," : "") + (sign(i) < 0 ? "-" : "+");
  return s + ")";
}

KPoly pencil_determinant(const QuarticDP& s) {
  const Field& k = s.field();
  KPoly d = KPoly::constant(k.one());
  for (const auto& l : s.lambdas()) d *= KPoly(k, {l, -k.one()});
  return d;
}

unsigned pencil_rank(const QuarticDP& s, const FieldElement& param) {
  unsigned r = 0;
  for (const auto& l : s.lambdas()) r += (l - param).is_zero() ? 0 : 1;
  return r;
}

std::vector<SingularMember> pencil_singular(const QuarticDP& s) {
  const RootSplit split = roots_in_k(pencil_determinant(s));
  if (split.remainder.degree() > 0 || split.roots.size() != 5) {
    fail(ErrorKind::Internal, kModule, "pencil determinant does not have five roots");
  }
  std::vector<SingularMember> out;
  for (const auto& param : split.roots) {
    SingularMember m{param, pencil_rank(s, param), {}};
    for (unsigned i = 0; i < 5; ++i) {
      if ((s.lambdas()[i] - param).is_zero()) m.kernel.push_back(i);
    }
    out.push_back(std::move(m));
  }
  return out;
}

GSReport GS_group(const QuarticDP& s) {
  GSReport r;
  for (unsigned m = 0; m < 32; ++m) {
    DiagInvolution g(m);
    if (std::find(r.elements.begin(), r.elements.end(), g) == r.elements.end()) r.elements.push_back(g);
  }
  if (r.elements.size() != 16) fail(ErrorKind::Internal, kModule, "G_S does not have 16 elements");
  // A sign change multiplies the coefficient of X_i^2 by sign_i^2.
  r.preserves_quadrics = true;
  for (const auto& g : r.elements) {
    for (unsigned i = 0; i < 5; ++i) {
      const FieldElement c = s.lambdas()[i] * s.field().from_int(g.sign(i) * g.sign(i));
      if (!(c == s.lambdas()[i])) r.preserves_quadrics = false;
    }
    if (g.fixes_hyperplane()) ++r.hyperplane_fixing;
  }
  r.reflections_fix_point_and_hyperplane = true;
  for (unsigned l = 0; l < 5; ++l) {
    const DiagInvolution g = DiagInvolution::reflection(l);
    // The -1 eigenspace is spanned by e_l, the +1 eigenspace is X_l = 0.
    for (unsigned i = 0; i < 5; ++i) {
      if ((g.sign(i) < 0) != (i == l)) r.reflections_fix_point_and_hyperplane = false;
    }
    if (g.eigenspace_dims() != std::pair<unsigned, unsigned>{4, 1}) r.reflections_fix_point_and_hyperplane = false;
  }
  return r;
}

std::vector<std::pair<std::size_t, NFData>> gs_nf_profile(const QuarticDP& s) {
  const Field& k = s.field();
  const auto& lam = s.lambdas();
  const GSReport gs = GS_group(s);
  std::vector<std::pair<std::size_t, NFData>> out;
  for (std::size_t idx = 1; idx < gs.elements.size(); ++idx) {
    const DiagInvolution& g = gs.elements[idx];
    std::vector<unsigned> minus, plus;
    for (unsigned i = 0; i < 5; ++i) (g.sign(i) < 0 ? minus : plus).push_back(i);
    if (minus.size() == 1) {
      // Plus space X_l = 0 cuts S in a double cover of P^1 branched over
      // the other four lambda_i; e_l itself is not on S.
      RatFunc disc = RatFunc::one(k);
      for (unsigned i : plus) disc *= RatFunc(KPoly(k, {-lam[i], k.one()}));
      out.emplace_back(idx, nf_from_discriminant(disc));
      continue;
    }
    // Line spanned by e_i, e_j: X_i^2 + X_j^2 = lambda_i X_i^2 + lambda_j X_j^2 = 0
    // forces X = 0 since lambda_i != lambda_j. The plane meets S in the base
    // points of a pencil of distinct diagonal conics, a finite set.
    if ((lam[minus[0]] - lam[minus[1]]).is_zero()) fail(ErrorKind::Internal, kModule, "repeated pencil parameter");
    out.emplace_back(idx, NFData{NFKind::Empty, KPoly::constant(k.one()), false, 0});
  }
  return out;
}

RatFunc jfun_rational(const Field& k) {
  const KPoly x = KPoly::variable(k);
  const KPoly one = KPoly::constant(k.one());
  const KPoly q = x * x - x + one;
  const KPoly xm1 = x - one;
  return RatFunc((q * q * q).scaled(k.from_int(256)), x * x * xm1 * xm1);
}

FieldElement jfun(const FieldElement& x) {
  const Field& k = x.field();
  const FieldElement xm1 = x - k.one();
  if (x.is_zero() || xm1.is_zero()) fail(ErrorKind::DivisionByZero, kModule, "j is infinite at 0 and 1");
  const FieldElement q = x * x - x + k.one();
  return k.from_int(256) * q * q * q / (x * x * xm1 * xm1);
}

ProjectivePoint jfun(const ProjectivePoint& x) {
  const Field& k = x.field();
  if (x.is_infinity() || x.value().is_zero() || x.value() == k.one()) return ProjectivePoint::infinity(k);
  return ProjectivePoint::finite(jfun(x.value()));
}

ProjectivePoint cross_ratio(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c,
                            const ProjectivePoint& d) {
  const std::array<const ProjectivePoint*, 4> pts{&a, &b, &c, &d};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (*pts[i] == *pts[j]) fail(ErrorKind::InvalidInput, kModule, "cross-ratio of repeated points");
    }
  }
  auto det = [](const ProjectivePoint& p, const ProjectivePoint& q) { return p.x() * q.w() - p.w() * q.x(); };
  return ProjectivePoint::homogeneous(det(a, c) * det(b, d), det(a, d) * det(b, c));
}

ProjectivePoint branch_j(const std::array<ProjectivePoint, 5>& points, unsigned l) {
  if (l > 4) fail(ErrorKind::InvalidInput, kModule, "index out of range");
  std::vector<ProjectivePoint> rest;
  for (unsigned i = 0; i < 5; ++i) {
    if (i != l) rest.push_back(points[i]);
  }
  return jfun(cross_ratio(rest[0], rest[1], rest[2], rest[3]));
}

ProjectivePoint branch_j(const QuarticDP& s, unsigned l) {
  const auto& lam = s.lambdas();
  return branch_j({ProjectivePoint::finite(lam[0]), ProjectivePoint::finite(lam[1]), ProjectivePoint::finite(lam[2]),
                   ProjectivePoint::finite(lam[3]), ProjectivePoint::finite(lam[4])},
                  l);
}

JTuple Jmap(const FieldElement& lambda, const FieldElement& mu) {
  const Field& k = lambda.field();
  const FieldElement one = k.one();
  if (lambda.is_zero() || mu.is_zero() || lambda == one || mu == one || lambda == mu) {
    fail(ErrorKind::PreconditionFailed, kModule, "(lambda, mu, 1, 0, infinity) must be pairwise distinct");
  }
  auto f = [](const FieldElement& v) { return ProjectivePoint::finite(jfun(v)); };
  return {f(mu), f(lambda), f(lambda / mu), f((lambda - one) / (mu - one)),
          f(lambda * (mu - one) / (mu * (lambda - one)))};
}

std::vector<ProjectivePoint> Jbar(const QuarticDP& s) {
  std::vector<ProjectivePoint> out;
  for (unsigned l = 0; l < 5; ++l) out.push_back(branch_j(s, l));
  std::sort(out.begin(), out.end());
  return out;
}

bool jacobian_identity_symbolic(const Field& k, long long rhs_factor) {
  const BiPoly l = BiPoly::var(k, 0);
  const BiPoly m = BiPoly::var(k, 1);
  const BiPoly one = BiPoly::constant(k, k.one());
  const RatFunc j = jfun_rational(k);
  const RatFunc dj = j.derivative();
  const BiFrac f1 = compose_bi(j, l, m);
  const BiFrac f2 = compose_bi(j, l - one, m - one);
  // Both products share the denominator d1^2 d2^2.
  const BiFrac lhs = f1.partial(0) * f2.partial(1) - f1.partial(1) * f2.partial(0);
  const BiPoly mm1 = m - one;
  const BiFrac rhs = compose_bi(dj, l, m) * compose_bi(dj, l - one, m - one) *
                     BiFrac{BiPoly::constant(k, k.from_int(rhs_factor)) * (m - l), m * m * mm1 * mm1};
  return lhs == rhs;
}

bool jacobian_identity_pointwise(const Field& k, unsigned samples, std::uint64_t seed, long long rhs_factor) {
  if (k.tag() != FieldTag::PrimeField) fail(ErrorKind::Unsupported, kModule, "pointwise check runs over prime fields");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, k.modulus() - 1);
  const FieldElement zero = k.zero(), one = k.one();
  const RatFunc dj = jfun_rational(k).derivative();
  unsigned done = 0;
  for (unsigned attempts = 0; done < samples; ++attempts) {
    if (attempts > 100 * samples + 1000) fail(ErrorKind::Internal, kModule, "could not find points off the poles");
    const FieldElement l = k.from_int(static_cast<long long>(dist(rng)));
    const FieldElement m = k.from_int(static_cast<long long>(dist(rng)));
    const FieldElement u = m.is_zero() ? zero : l / m;
    const FieldElement v = (m - one).is_zero() ? zero : (l - one) / (m - one);
    if (m.is_zero() || (m - one).is_zero() || u.is_zero() || (u - one).is_zero() || v.is_zero() || (v - one).is_zero()) {
      continue;
    }
    // Partial derivatives of F1 = j(l/m), F2 = j((l-1)/(m-1)).
    auto f1 = [&](const Dual& a, const Dual& b) { return jfun_dual(a / b); };
    auto f2 = [&](const Dual& a, const Dual& b) { return jfun_dual((a - constant(one)) / (b - constant(one))); };
    const Dual dl{l, one}, dm{m, one}, cl = constant(l), cm = constant(m);
    const FieldElement lhs = f1(dl, cm).b * f2(cl, dm).b - f1(cl, dm).b * f2(dl, cm).b;
    const FieldElement rhs = k.from_int(rhs_factor) * eval_rat(dj, u) * eval_rat(dj, v) * (m - l) / (m * m * (m - one) * (m - one));
    if (!(lhs == rhs)) return false;
    ++done;
  }
  return true;
}

bool jacobian_identity_check() { return jacobian_identity_symbolic(Field::rationals()); }

FieldElement fiber_zeta(const Field& k) {
  auto z = k.primitive_root_of_unity(6);
  if (!z) fail(ErrorKind::RequiresFieldExtension, kModule, "no zeta with zeta^3 = -1, zeta != -1");
  FieldElement best = *z;
  const FieldElement other = z->pow(5);
  if (other < best) best = other;
  return best;
}

std::vector<std::pair<FieldElement, FieldElement>> fiber_search(const FieldElement& alpha, std::uint64_t q) {
  const Field& k = alpha.field();
  if (k.tag() != FieldTag::PrimeField || k.modulus() != q) fail(ErrorKind::FieldMismatch, kModule, "alpha must lie in F_q");
  if (q % 6 != 1) fail(ErrorKind::InvalidInput, kModule, "fiber search needs q = 1 mod 6");
  const FieldElement zeta = fiber_zeta(k);
  const JTuple target = Jmap(alpha, zeta);
  const auto elems = k.elements();
  const FieldElement one = k.one();
  std::vector<std::pair<FieldElement, FieldElement>> out;
  for (const auto& l : elems) {
    if (l.is_zero() || l == one) continue;
    for (const auto& m : elems) {
      if (m.is_zero() || m == one || m == l) continue;
      if (Jmap(l, m) == target) out.emplace_back(l, m);
    }
  }
  return out;
}

FiberStats fiber_statistics(std::uint64_t q) {
  if (q % 6 != 1) fail(ErrorKind::InvalidInput, kModule, "fiber search needs q = 1 mod 6");
  const Field k = Field::prime(q);
  FiberStats st;
  st.q = q;
  st.zeta = fiber_zeta(k);
  const auto elems = k.elements();
  const FieldElement one = k.one();
  std::map<std::array<std::uint64_t, 5>, unsigned> counts;
  auto key = [](const JTuple& j) {
    std::array<std::uint64_t, 5> r{};
    for (std::size_t i = 0; i < 5; ++i) r[i] = j[i].value().residue();
    return r;
  };
  for (const auto& l : elems) {
    if (l.is_zero() || l == one) continue;
    for (const auto& m : elems) {
      if (m.is_zero() || m == one || m == l) continue;
      ++counts[key(Jmap(l, m))];
    }
  }
  for (const auto& a : elems) {
    if (a.is_zero() || a == one || a == st.zeta) continue;
    ++st.alphas;
    if (counts.at(key(Jmap(a, st.zeta))) == 1) {
      ++st.singletons;
      st.singleton_alphas.push_back(a);
    }
  }
  return st;
}

CharacterReport fermat_cubic_check(const Field& k) {
  auto zeta = k.primitive_root_of_unity(3);
  if (!zeta) fail(ErrorKind::RequiresFieldExtension, kModule, "no primitive cube root of unity");
  // Group (mu_3)^4 / mu_3 with representatives a_3 = 0.
  std::vector<std::array<unsigned, 4>> group;
  for (unsigned c = 0; c < 27; ++c) group.push_back({c % 3, (c / 3) % 3, c / 9, 0});
  std::vector<std::array<unsigned, 4>> monomials;
  for (unsigned a = 0; a <= 3; ++a) {
    for (unsigned b = 0; a + b <= 3; ++b) {
      for (unsigned c = 0; a + b + c <= 3; ++c) monomials.push_back({a, b, c, 3 - a - b - c});
    }
  }
  auto value = [&](const std::array<unsigned, 4>& g, const std::array<unsigned, 4>& e) {
    unsigned s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += g[i] * e[i];
    return zeta->pow(s % 3);
  };
  CharacterReport r;
  r.group_order = static_cast<unsigned>(group.size());
  r.monomials = static_cast<unsigned>(monomials.size());
  r.exponent_ok = true;
  for (const auto& g : group) {
    // g is scalar in PGL_4 iff all exponents agree; its cube is always scalar.
    const bool scalar = g[0] == g[3] && g[1] == g[3] && g[2] == g[3];
    std::array<FieldElement, 4> cube;
    for (std::size_t i = 0; i < 4; ++i) cube[i] = zeta->pow(3 * g[i]);
    const bool cube_scalar = std::all_of(cube.begin(), cube.end(), [&](const FieldElement& c) { return c == cube[0]; });
    if (scalar != (&g == &group.front()) || !cube_scalar) r.exponent_ok = false;
  }
  r.preserves_form = true;
  for (const auto& g : group) {
    for (unsigned i = 0; i < 4; ++i) {
      std::array<unsigned, 4> e{0, 0, 0, 0};
      e[i] = 3;
      if (!value(g, e).is_one()) r.preserves_form = false;
    }
  }
  r.smooth = !k.from_int(3).is_zero();
  std::map<std::vector<FieldElement>, unsigned> characters;
  for (const auto& e : monomials) {
    std::vector<FieldElement> chi;
    for (const auto& g : group) chi.push_back(value(g, e));
    if (std::all_of(chi.begin(), chi.end(), [](const FieldElement& c) { return c.is_one(); })) {
      ++r.invariant;
    } else {
      ++characters[chi];
    }
  }
  r.semi_invariant_lines = 0;
  r.distinct_characters = true;
  for (const auto& [chi, mult] : characters) {
    r.semi_invariant_lines += mult;
    if (mult != 1) r.distinct_characters = false;
  }
  return r;
}

CharacterReport quadric_character_check() {
  std::vector<std::array<int, 5>> group;
  for (unsigned m = 0; m < 32; ++m) {
    std::array<int, 5> s{};
    for (unsigned i = 0; i < 5; ++i) s[i] = (m >> i) & 1u ? -1 : 1;
    group.push_back(s);
  }
  CharacterReport r;
  r.group_order = 32;
  r.exponent_ok = true;
  r.preserves_form = true;
  r.smooth = true;  // sum X_i^2 has full rank
  std::map<std::vector<int>, unsigned> characters;
  for (unsigned i = 0; i < 5; ++i) {
    for (unsigned j = i; j < 5; ++j) {
      ++r.monomials;
      std::vector<int> chi;
      for (const auto& g : group) chi.push_back(g[i] * g[j]);
      if (std::all_of(chi.begin(), chi.end(), [](int c) { return c == 1; })) {
        ++r.invariant;
      } else {
        ++characters[chi];
      }
    }
  }
  for (const auto& g : group) {
    for (unsigned i = 0; i < 5; ++i) {
      if (g[i] * g[i] != 1) r.preserves_form = false;
    }
  }
  r.distinct_characters = true;
  for (const auto& [chi, mult] : characters) {
    r.semi_invariant_lines += mult;
    if (mult != 1) r.distinct_characters = false;
  }
  return r;
}

unsigned invariant_quadrics(const std::array<int, 5>& signs) {
  unsigned n = 0;
  for (unsigned i = 0; i < 5; ++i) {
    for (unsigned j = i; j < 5; ++j) n += signs[i] * signs[j] == 1 ? 1 : 0;
  }
  return n;
}

const std::vector<WeylEntry>& weyl_table() {
  static const std::vector<WeylEntry> table = [] {
    std::vector<WeylEntry> t{
        {4, "A4", {{2, 3}, {3, 1}, {5, 1}}, 0},
        {5, "D5", {{2, 7}, {3, 1}, {5, 1}}, 0},
        {6, "E6", {{2, 7}, {3, 4}, {5, 1}}, 0},
        {7, "E7", {{2, 10}, {3, 4}, {5, 1}, {7, 1}}, 0},
        {8, "E8", {{2, 14}, {3, 5}, {5, 2}, {7, 1}}, 0},
    };
    for (auto& e : t) {
      e.order = 1;
      for (const auto& [p, a] : e.factorization) {
        for (unsigned i = 0; i < a; ++i) e.order *= p;
      }
    }
    return t;
  }();
  return table;
}

bool weyl_table_query(unsigned ell, unsigned p, unsigned r) {
  if (ell < 4 || ell > 8) fail(ErrorKind::InvalidInput, kModule, "ell must lie in 4..8");
  const WeylEntry& e = weyl_table()[ell - 4];
  for (const auto& [q, a] : e.factorization) {
    if (q == p) return r <= a;
  }
  return r == 0;
}

unsigned hurwitz_max_rank(unsigned g, unsigned p) {
  if (g < 2) fail(ErrorKind::InvalidInput, kModule, "genus must be at least 2");
  if (p < 2) fail(ErrorKind::InvalidInput, kModule, "p must be prime");
  unsigned n = 2 * g - 2;
  unsigned r = 1;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  return r;
}

}  // namespace cremona
