#include <algorithm>
#include <numeric>

#include "cremona/algorithms.hpp"

namespace cremona {
namespace {

constexpr const char* kModule = "exactfield";
constexpr std::uint64_t kMaxScan = std::uint64_t{1} << 26;
constexpr unsigned long kMaxTrialDivisor = 10'000'000;

KPoly one_poly(const Field& k) { return KPoly::constant(k.one()); }

// Positive divisors of |n| (n != 0) by trial division.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> primes;
  for (unsigned long d = 2; mpz_class(d) * d <= n; ++d) {
    if (d > kMaxTrialDivisor) fail(ErrorKind::Unsupported, kModule, "coefficient too large for the rational root search");
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    primes.emplace_back(mpz_class(d), e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [pr, e] : primes) {
    const std::size_t base = out.size();
    mpz_class pw = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pw *= pr;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

std::optional<FieldElement> rational_root_of(const KPoly& f) {
  const Field& k = f.field();
  if (f.coeff(0).is_zero()) return k.zero();
  mpz_class lcm = 1;
  std::vector<mpq_class> q;
  for (const auto& c : f.coefficients()) {
    auto r = c.to_rational();
    if (!r) return std::nullopt;
    q.push_back(*r);
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r->get_den_mpz_t());
  }
  const mpz_class a0 = mpz_class(q.front() * lcm);
  const mpz_class an = mpz_class(q.back() * lcm);
  const auto num_div = divisors(a0);
  const auto den_div = divisors(an);
  for (const auto& dd : den_div) {
    for (const auto& nd : num_div) {
      for (int sign : {1, -1}) {
        mpq_class cand(sign * nd, dd);
        cand.canonicalize();
        if (cand.get_den() != dd) continue;  // visited under a smaller denominator
        FieldElement x = k.from_rational(cand);
        if (f(x).is_zero()) return x;
      }
    }
  }
  return std::nullopt;
}

std::optional<FieldElement> cyclotomic_root_of(const KPoly& f) {
  const Field& k = f.field();
  if (auto r = rational_root_of(f)) return r;
  const unsigned n = k.cyclotomic_order();
  const unsigned big = (n % 2 == 0) ? n : 2 * n;
  const FieldElement rho = *k.primitive_root_of_unity(big);
  FieldElement x = k.one();
  for (unsigned j = 0; j < big; ++j, x *= rho) {
    if (f(x).is_zero()) return x;
  }
  if (f.degree() == 2) {
    const FieldElement a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    const FieldElement disc = b * b - k.from_int(4) * a * c;
    if (auto s = disc.pth_root(2)) {
      FieldElement r1 = (-b + *s) / (k.from_int(2) * a);
      FieldElement r2 = (-b - *s) / (k.from_int(2) * a);
      return std::min(r1, r2);
    }
  }
  return std::nullopt;
}

KPoly linear(const FieldElement& r) { return KPoly(r.field(), {-r, r.field().one()}); }

}  // namespace

SquarefreeDecomposition yun_squarefree(const KPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, kModule, "squarefree decomposition of the zero polynomial");
  const Field& k = f.field();
  const std::uint64_t ch = k.characteristic();
  if (ch != 0 && static_cast<std::uint64_t>(f.degree()) >= ch) {
    fail(ErrorKind::Unsupported, kModule, "characteristic too small for squarefree decomposition");
  }
  SquarefreeDecomposition out{f.leading(), {}};
  if (f.degree() == 0) return out;
  const KPoly g = f.monic();
  const KPoly dg = g.derivative();
  KPoly a = gcd(g, dg);
  KPoly b = g / a;
  KPoly c = dg / a;
  KPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0) out.factors.push_back({a, i});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  return out;
}

KPoly odd_part(const KPoly& f) {
  KPoly r = one_poly(f.field());
  for (const auto& sf : yun_squarefree(f).factors) {
    if (sf.multiplicity % 2 == 1) r *= sf.factor;
  }
  return r;
}

std::optional<RatFunc> pth_power_root(const RatFunc& f, unsigned p) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, kModule, "p-th root of zero");
  const Field& k = f.field();
  auto monic_root = [&](const KPoly& g) -> std::optional<KPoly> {
    KPoly r = one_poly(k);
    for (const auto& sf : yun_squarefree(g).factors) {
      if (sf.multiplicity % p != 0) return std::nullopt;
      r *= sf.factor.pow(sf.multiplicity / p);
    }
    return r;
  };
  auto c = f.num().leading().pth_root(p);
  if (!c) return std::nullopt;
  auto n = monic_root(f.num().monic());
  if (!n) return std::nullopt;
  auto d = monic_root(f.den());
  if (!d) return std::nullopt;
  return RatFunc(n->scaled(*c), *d);
}

KPoly palindromic_reduce(const KPoly& s) {
  if (s.is_zero()) fail(ErrorKind::InvalidInput, kModule, "palindromic reduction of the zero polynomial");
  if (s.degree() % 2 != 0) fail(ErrorKind::InvalidInput, kModule, "palindromic reduction needs even degree");
  return palindromic_reduce(s, static_cast<std::size_t>(s.degree()));
}

KPoly palindromic_reduce(const KPoly& s, std::size_t formal_degree) {
  const Field& k = s.field();
  if (formal_degree % 2 != 0) fail(ErrorKind::InvalidInput, kModule, "palindromic reduction needs even degree");
  if (s.degree() > static_cast<int>(formal_degree)) {
    fail(ErrorKind::InvalidInput, kModule, "polynomial exceeds its formal degree");
  }
  for (std::size_t i = 0; i <= formal_degree; ++i) {
    if (!(s.coeff(i) == s.coeff(formal_degree - i))) {
      fail(ErrorKind::InvalidInput, kModule, "polynomial is not self-reciprocal");
    }
  }
  const std::size_t m = formal_degree / 2;
  // v^k + v^-k = D_k(w) with D_1 = w, D_2 = w^2 - 2, D_{k+1} = w D_k - D_{k-1}.
  const KPoly w = KPoly::variable(k);
  KPoly prev = KPoly::constant(k.from_int(2));
  KPoly cur = w;
  KPoly t = KPoly::constant(s.coeff(m));
  for (std::size_t j = 1; j <= m; ++j) {
    t += cur.scaled(s.coeff(m + j));
    KPoly next = w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return t;
}

RatFunc v1_invariant(const Field& k) {
  const RatFunc t = RatFunc::variable(k);
  return t * t + (t * t).inverse();
}

RatFunc rewrite_in_invariant(const RatFunc& delta) {
  const Field& k = delta.field();
  const RatFunc t = RatFunc::variable(k);
  if (!(delta.negate_variable() == delta) || !(delta.compose(t.inverse()) == delta)) {
    fail(ErrorKind::InvalidInput, kModule, "function is not invariant under t -> -t and t -> 1/t");
  }
  if (delta.is_zero()) return delta;
  KPoly num = delta.num();
  KPoly den = delta.den();
  if (num.degree() % 2 != 0) {
    num *= KPoly::variable(k);
    den *= KPoly::variable(k);
  }
  auto even_part = [&](const KPoly& f) {
    std::vector<FieldElement> c;
    for (std::size_t i = 0; i < f.coefficients().size(); i += 2) c.push_back(f.coeff(i));
    return KPoly(k, std::move(c));
  };
  const KPoly n1 = even_part(num);
  const KPoly d1 = even_part(den);
  const std::size_t d = static_cast<std::size_t>(d1.degree());
  const KPoly d1_rev = d1.reciprocal(d);
  const KPoly g = n1 * d1_rev;
  const KPoly h = d1 * d1_rev;
  return RatFunc(palindromic_reduce(g, 2 * d), palindromic_reduce(h, 2 * d));
}

RootSplit roots_in_k(const KPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, kModule, "roots of the zero polynomial");
  const Field& k = f.field();
  RootSplit out{{}, f};
  KPoly& rest = out.remainder;
  auto split = [&](const FieldElement& r) {
    while (rest.degree() > 0) {
      auto [q, rem] = divmod(rest, linear(r));
      if (!rem.is_zero()) break;
      out.roots.push_back(r);
      rest = q;
    }
  };
  switch (k.tag()) {
    case FieldTag::PrimeField: {
      if (k.modulus() > kMaxScan) fail(ErrorKind::Unsupported, kModule, "exhaustive root search needs q < 2^26");
      for (std::uint64_t x = 0; x < k.modulus() && rest.degree() > 0; ++x) {
        FieldElement e = k.from_int(static_cast<long long>(x));
        if (rest(e).is_zero()) split(e);
      }
      break;
    }
    case FieldTag::Rationals:
    case FieldTag::Cyclotomic:
      while (rest.degree() > 0) {
        std::optional<FieldElement> r;
        if (rest.degree() == 1) {
          r = -rest.coeff(0) / rest.coeff(1);
        } else if (k.tag() == FieldTag::Rationals) {
          r = rational_root_of(rest);
        } else {
          r = cyclotomic_root_of(rest);
        }
        if (!r) break;
        split(*r);
      }
      break;
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

BiRatFunc inner_derivative(const BiRatFunc& f) {
  auto coefficient_derivative = [](const Poly<RatFunc>& p) {
    std::vector<RatFunc> c;
    for (const auto& a : p.coefficients()) c.push_back(a.derivative());
    return Poly<RatFunc>(p.field(), std::move(c));
  };
  const auto& n = f.num();
  const auto& d = f.den();
  return BiRatFunc(coefficient_derivative(n) * d - n * coefficient_derivative(d), d * d);
}

}  // namespace cremona
