#include "cremona/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace detail {

struct FieldSpec {
  FieldTag tag = FieldTag::Rationals;
  std::uint64_t q = 0;
  unsigned n = 1;
  unsigned degree = 1;
  // Monic minimal polynomial of w, ascending coefficients (cyclotomic only).
  std::vector<mpq_class> phi;
};

}  // namespace detail

namespace {

constexpr const char* kModule = "exactfield";

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  QPoly quot(a.size() - db, mpq_class(0));
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    mpq_class c = a[i] / b[db];
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db);
  trim(a);
  trim(quot);
  return {quot, a};
}

QPoly cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, QPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  QPoly p(n + 1, mpq_class(0));
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = qdivmod(p, cyclotomic_polynomial(d)).first;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<mpz_class> integer_root(const mpz_class& a, unsigned p) {
  if (a < 0) {
    if (p % 2 == 0) return std::nullopt;
    auto r = integer_root(-a, p);
    if (!r) return std::nullopt;
    return mpz_class(-*r);
  }
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), p) == 0) return std::nullopt;
  return r;
}

std::optional<mpq_class> rational_root(const mpq_class& a, unsigned p) {
  auto n = integer_root(a.get_num(), p);
  if (!n) return std::nullopt;
  auto d = integer_root(a.get_den(), p);
  if (!d) return std::nullopt;
  mpq_class r(*n, *d);
  r.canonicalize();
  return r;
}

// Tonelli-Shanks; `a` must be a nonzero quadratic residue mod the odd prime q.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t q) {
  std::uint64_t s = 0, m = q - 1;
  while ((m & 1) == 0) {
    m >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (q - 1) / 2, q) != q - 1) ++z;
  std::uint64_t c = powmod(z, m, q);
  std::uint64_t x = powmod(a, (m + 1) / 2, q);
  std::uint64_t t = powmod(a, m, q);
  std::uint64_t e = s;
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, q);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < e; ++j) b = mulmod(b, b, q);
    x = mulmod(x, b, q);
    c = mulmod(b, b, q);
    t = mulmod(t, c, q);
    e = i;
  }
  return x;
}

// Residues with exhaustive search beyond this size are refused.
constexpr std::uint64_t kMaxScan = 1ULL << 26;

std::string rational_text(const mpq_class& v) { return v.get_str(); }

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() {
  static const Field q(std::make_shared<detail::FieldSpec>());
  return q;
}

Field Field::prime(std::uint64_t q) {
  if (q <= 3 || q >= (1ULL << 62) || !is_prime(q)) {
    fail(ErrorKind::InvalidInput, kModule, "prime field modulus must be a prime > 3, got " + std::to_string(q));
  }
  auto spec = std::make_shared<detail::FieldSpec>();
  spec->tag = FieldTag::PrimeField;
  spec->q = q;
  return Field(spec);
}

Field Field::cyclotomic(unsigned n) {
  if (n == 0) fail(ErrorKind::InvalidInput, kModule, "cyclotomic order must be positive");
  auto spec = std::make_shared<detail::FieldSpec>();
  spec->tag = FieldTag::Cyclotomic;
  spec->n = n;
  spec->phi = cyclotomic_polynomial(n);
  spec->degree = static_cast<unsigned>(spec->phi.size() - 1);
  return Field(spec);
}

Field Field::parse(std::string_view text) {
  auto number = [&](std::string_view digits) -> std::uint64_t {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail(ErrorKind::InvalidInput, kModule, "bad field specification '" + std::string(text) + "'");
    }
    return std::stoull(std::string(digits));
  };
  if (text == "QQ" || text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) return prime(number(text.substr(3)));
  if (text.rfind("cyclo:", 0) == 0) return cyclotomic(static_cast<unsigned>(number(text.substr(6))));
  fail(ErrorKind::InvalidInput, kModule, "unknown field '" + std::string(text) + "' (expected QQ, Fp:<q> or cyclo:<n>)");
}

FieldTag Field::tag() const { return spec_->tag; }
std::uint64_t Field::modulus() const { return spec_->q; }
unsigned Field::cyclotomic_order() const { return spec_->n; }
unsigned Field::degree() const { return spec_->degree; }
std::uint64_t Field::characteristic() const { return spec_->tag == FieldTag::PrimeField ? spec_->q : 0; }

std::string Field::name() const {
  switch (spec_->tag) {
    case FieldTag::Rationals: return "QQ";
    case FieldTag::PrimeField: return "Fp:" + std::to_string(spec_->q);
    case FieldTag::Cyclotomic: return "cyclo:" + std::to_string(spec_->n);
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.spec_ == b.spec_) return true;
  return a.spec_->tag == b.spec_->tag && a.spec_->q == b.spec_->q && a.spec_->n == b.spec_->n;
}

FieldElement Field::zero() const { return FieldElement(*this); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long value) const {
  FieldElement e(*this);
  if (tag() == FieldTag::PrimeField) {
    long long r = value % static_cast<long long>(spec_->q);
    if (r < 0) r += static_cast<long long>(spec_->q);
    e.residue_ = static_cast<std::uint64_t>(r);
  } else {
    e.coords_[0] = mpq_class(static_cast<long>(value));
  }
  return e;
}

FieldElement Field::from_rational(const mpq_class& value) const {
  if (tag() == FieldTag::PrimeField) {
    mpz_class q(std::to_string(spec_->q));
    mpz_class num = value.get_num() % q;
    mpz_class den = value.get_den() % q;
    if (den == 0) fail(ErrorKind::DivisionByZero, kModule, "denominator vanishes in " + name());
    if (num < 0) num += q;
    return from_int(num.get_si()) / from_int(den.get_si());
  }
  FieldElement e(*this);
  e.coords_[0] = value;
  return e;
}

FieldElement Field::generator() const {
  if (tag() != FieldTag::Cyclotomic) return one();
  FieldElement e(*this);
  if (spec_->degree == 1) {
    e.coords_[0] = -spec_->phi[0];
  } else {
    e.coords_[1] = 1;
  }
  return e;
}

std::optional<FieldElement> Field::primitive_root_of_unity(unsigned m) const {
  if (m == 0) return std::nullopt;
  if (m == 1) return one();
  switch (tag()) {
    case FieldTag::Rationals:
      if (m == 2) return from_int(-1);
      return std::nullopt;
    case FieldTag::PrimeField: {
      const std::uint64_t q = spec_->q;
      if ((q - 1) % m != 0) return std::nullopt;
      const auto primes = prime_factors(m);
      for (std::uint64_t c = 2; c < q; ++c) {
        std::uint64_t z = powmod(c, (q - 1) / m, q);
        bool primitive = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t r) { return powmod(z, m / r, q) != 1; });
        if (!primitive) continue;
        std::uint64_t best = z;
        for (unsigned k = 2; k < m; ++k) {
          if (std::gcd(k, m) == 1) best = std::min(best, powmod(z, k, q));
        }
        return from_int(static_cast<long long>(best));
      }
      return std::nullopt;
    }
    case FieldTag::Cyclotomic: {
      const unsigned n = spec_->n;
      const unsigned big = (n % 2 == 0) ? n : 2 * n;
      if (big % m != 0) return std::nullopt;
      if (n % m == 0) return generator().pow(n / m);
      FieldElement rho = (n % 2 == 0) ? generator() : -generator();
      return rho.pow(big / m);
    }
  }
  return std::nullopt;
}

std::vector<FieldElement> Field::elements() const {
  if (tag() != FieldTag::PrimeField) fail(ErrorKind::Unsupported, kModule, "only prime fields are enumerable");
  if (spec_->q > kMaxScan) fail(ErrorKind::Unsupported, kModule, "field too large to enumerate");
  std::vector<FieldElement> out;
  out.reserve(spec_->q);
  for (std::uint64_t r = 0; r < spec_->q; ++r) {
    FieldElement e(*this);
    e.residue_ = r;
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : FieldElement(Field::rationals()) {}

FieldElement::FieldElement(Field k) : field_(std::move(k)) {
  if (field_.tag() != FieldTag::PrimeField) coords_.assign(field_.degree(), mpq_class(0));
}

void FieldElement::check_same_field(const FieldElement& b) const {
  if (!(field_ == b.field_)) {
    fail(ErrorKind::FieldMismatch, kModule, "mixing elements of " + field_.name() + " and " + b.field_.name());
  }
}

bool FieldElement::is_zero() const {
  if (field_.tag() == FieldTag::PrimeField) return residue_ == 0;
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (field_.tag() == FieldTag::PrimeField) return residue_ == 1;
  if (coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return c == 0; });
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  if (field_.tag() == FieldTag::PrimeField) {
    r.residue_ = residue_ == 0 ? 0 : field_.modulus() - residue_;
  } else {
    for (auto& c : r.coords_) c = -c;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  check_same_field(b);
  if (field_.tag() == FieldTag::PrimeField) {
    const std::uint64_t q = field_.modulus();
    residue_ = (residue_ + b.residue_) % q;
  } else {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) { return *this += -b; }

void FieldElement::reduce() {
  const auto& phi = field_.spec().phi;
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = coords_.size(); i-- > d;) {
    if (coords_[i] == 0) continue;
    mpq_class c = coords_[i];
    for (std::size_t j = 0; j <= d; ++j) coords_[i - d + j] -= c * phi[j];
  }
  coords_.resize(d, mpq_class(0));
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  check_same_field(b);
  switch (field_.tag()) {
    case FieldTag::PrimeField:
      residue_ = mulmod(residue_, b.residue_, field_.modulus());
      break;
    case FieldTag::Rationals:
      coords_[0] *= b.coords_[0];
      break;
    case FieldTag::Cyclotomic: {
      if (coords_.size() == 1) {
        coords_[0] *= b.coords_[0];
        break;
      }
      std::vector<mpq_class> prod(2 * coords_.size() - 1, mpq_class(0));
      for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j) prod[i + j] += coords_[i] * b.coords_[j];
      }
      coords_ = std::move(prod);
      reduce();
      break;
    }
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, kModule, "division by zero in " + field_.name());
  FieldElement r(*this);
  switch (field_.tag()) {
    case FieldTag::PrimeField:
      r.residue_ = powmod(residue_, field_.modulus() - 2, field_.modulus());
      return r;
    case FieldTag::Rationals:
      r.coords_[0] = 1 / coords_[0];
      return r;
    case FieldTag::Cyclotomic: {
      if (coords_.size() == 1) {
        r.coords_[0] = 1 / coords_[0];
        return r;
      }
      // Extended Euclid in Q[z]: find s with s*a = 1 mod phi.
      QPoly a = coords_;
      trim(a);
      QPoly b = field_.spec().phi;
      QPoly s0{mpq_class(1)}, s1{};
      while (!(b.empty())) {
        auto [quot, rem] = qdivmod(a, b);
        QPoly s2 = qsub(s0, qmul(quot, s1));
        a = std::move(b);
        b = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // a is a nonzero constant now.
      mpq_class inv = 1 / a[0];
      for (auto& c : s0) c *= inv;
      r.coords_ = std::move(s0);
      r.coords_.resize(std::max<std::size_t>(r.coords_.size(), field_.degree()), mpq_class(0));
      r.reduce();
      return r;
    }
  }
  return r;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  check_same_field(b);
  return *this *= b.inverse();
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::optional<mpq_class> FieldElement::to_rational() const {
  if (field_.tag() == FieldTag::PrimeField) return std::nullopt;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return std::nullopt;
  }
  return coords_[0];
}

std::optional<FieldElement> FieldElement::pth_root(unsigned p) const {
  if (p == 0) fail(ErrorKind::InvalidInput, kModule, "root index must be positive");
  if (p == 1 || is_zero()) return *this;
  switch (field_.tag()) {
    case FieldTag::Rationals: {
      auto r = rational_root(coords_[0], p);
      if (!r) return std::nullopt;
      return field_.from_rational(*r);
    }
    case FieldTag::PrimeField: {
      const std::uint64_t q = field_.modulus();
      const std::uint64_t g = std::gcd<std::uint64_t>(p, q - 1);
      if (g == 1) {
        // x -> x^p is a bijection; invert the exponent mod q-1.
        mpz_class inv;
        mpz_class pp(p), order(std::to_string(q - 1));
        mpz_invert(inv.get_mpz_t(), pp.get_mpz_t(), order.get_mpz_t());
        FieldElement r(*this);
        r.residue_ = powmod(residue_, inv.get_ui(), q);
        return r;
      }
      if (powmod(residue_, (q - 1) / g, q) != 1) return std::nullopt;
      FieldElement r(*this);
      if (p == 2) {
        r.residue_ = sqrt_mod(residue_, q);
        return r;
      }
      if (q > kMaxScan) fail(ErrorKind::Unsupported, kModule, "p-th roots by exhaustive search need q < 2^26");
      for (std::uint64_t x = 1; x < q; ++x) {
        if (powmod(x, p, q) == residue_) {
          r.residue_ = x;
          return r;
        }
      }
      return std::nullopt;
    }
    case FieldTag::Cyclotomic: {
      const unsigned n = field_.cyclotomic_order();
      const unsigned big = (n % 2 == 0) ? n : 2 * n;
      const FieldElement rho = (n % 2 == 0) ? field_.generator() : -field_.generator();
      FieldElement rho_j = field_.one();
      for (unsigned j = 0; j < big; ++j, rho_j *= rho) {
        auto u = (*this / rho_j).to_rational();
        if (!u) continue;
        auto r = rational_root(*u, p);
        if (!r) continue;
        for (unsigned m = 0; m < big; ++m) {
          if ((static_cast<unsigned long long>(m) * p) % big == j) return field_.from_rational(*r) * rho.pow(m);
        }
      }
      if (p == 2 && field_.degree() == 2) {
        // Q(sqrt(D)) with sqrt(D) = 2w + c1 where phi = z^2 + c1 z + c0.
        const auto& phi = field_.spec().phi;
        const mpq_class c0 = phi[0], c1 = phi[1];
        const mpq_class disc = c1 * c1 - 4 * c0;
        const FieldElement root_d = field_.from_int(2) * field_.generator() + field_.from_rational(c1);
        const mpq_class beta = coords_[1] / 2;
        const mpq_class alpha = coords_[0] - c1 * beta;
        auto build = [&](const mpq_class& u, const mpq_class& v) {
          return field_.from_rational(u) + field_.from_rational(v) * root_d;
        };
        if (beta == 0) {
          if (auto u = rational_root(alpha, 2)) return build(*u, 0);
          if (auto v = rational_root(alpha / disc, 2)) return build(0, *v);
          return std::nullopt;
        }
        auto s = rational_root(alpha * alpha - disc * beta * beta, 2);
        if (!s) return std::nullopt;
        for (const mpq_class& x : {mpq_class((alpha + *s) / 2), mpq_class((alpha - *s) / 2)}) {
          if (x == 0) continue;
          if (auto u = rational_root(x, 2)) return build(*u, beta / (2 * *u));
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string FieldElement::to_string() const {
  switch (field_.tag()) {
    case FieldTag::PrimeField: return std::to_string(residue_);
    case FieldTag::Rationals: return rational_text(coords_[0]);
    case FieldTag::Cyclotomic: break;
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coords_.size(); i-- > 0;) {
    const mpq_class& c = coords_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << rational_text(mag);
      continue;
    }
    if (mag != 1) {
      if (mag.get_den() == 1) {
        out << rational_text(mag) << "*";
      } else {
        out << "(" << rational_text(mag) << ")*";
      }
    }
    out << "w";
    if (i > 1) out << "^" << i;
  }
  if (first) return "0";
  return out.str();
}

bool FieldElement::is_atomic() const {
  const std::string s = to_string();
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' || c == ' ' || c == '+' || c == '-' || c == '*' || c == '^') return false;
  }
  return true;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.tag() == FieldTag::PrimeField) return a.residue_ == b.residue_;
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  if (a.field_.tag() == FieldTag::PrimeField) return a.residue_ <=> b.residue_;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// ProjectivePoint

ProjectivePoint ProjectivePoint::finite(FieldElement x) { return ProjectivePoint(std::move(x), false); }

ProjectivePoint ProjectivePoint::infinity(const Field& k) { return ProjectivePoint(k.zero(), true); }

ProjectivePoint ProjectivePoint::homogeneous(const FieldElement& x, const FieldElement& w) {
  if (w.is_zero()) {
    if (x.is_zero()) fail(ErrorKind::InvalidInput, kModule, "(0 : 0) is not a point of P^1");
    return infinity(x.field());
  }
  return finite(x / w);
}

const FieldElement& ProjectivePoint::value() const {
  if (infinite_) fail(ErrorKind::InvalidInput, kModule, "point at infinity has no affine coordinate");
  return x_;
}

FieldElement ProjectivePoint::x() const { return infinite_ ? x_.field().one() : x_; }

FieldElement ProjectivePoint::w() const { return infinite_ ? x_.field().zero() : x_.field().one(); }

std::string ProjectivePoint::to_string() const { return infinite_ ? "inf" : x_.to_string(); }

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.infinite_ != b.infinite_) return false;
  return a.infinite_ ? a.field() == b.field() : a.x_ == b.x_;
}

std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.x_ <=> b.x_;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::RequiresFieldExtension: return "RequiresFieldExtension";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::ClosureExceeded: return "ClosureExceeded";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace cremona
