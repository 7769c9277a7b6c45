#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/conjclass.hpp"

namespace testing {

using namespace cremona;

/// Deterministic generator shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long long>(n) - 1)); }

  /// Small integers over Q, small fractions sometimes; uniform residues over F_q.
  FieldElement scalar(const Field& k) {
    if (k.tag() == FieldTag::PrimeField) return k.from_int(integer(0, static_cast<long long>(k.modulus()) - 1));
    FieldElement v = k.from_int(integer(-9, 9));
    if (integer(0, 3) == 0) v /= k.from_int(integer(1, 5));
    if (k.tag() == FieldTag::Cyclotomic && coin()) v += k.from_int(integer(-3, 3)) * k.generator();
    return v;
  }
  FieldElement nonzero(const Field& k) {
    for (;;) {
      FieldElement v = scalar(k);
      if (!v.is_zero()) return v;
    }
  }

  KPoly poly(const Field& k, int max_degree) {
    std::vector<FieldElement> c;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(scalar(k));
    return KPoly(k, std::move(c));
  }
  KPoly nonzero_poly(const Field& k, int max_degree) {
    for (;;) {
      KPoly p = poly(k, max_degree);
      if (!p.is_zero()) return p;
    }
  }
  RatFunc ratfunc(const Field& k, int max_degree) { return RatFunc(poly(k, max_degree), nonzero_poly(k, max_degree)); }
  RatFunc nonzero_ratfunc(const Field& k, int max_degree) {
    return RatFunc(nonzero_poly(k, max_degree), nonzero_poly(k, max_degree));
  }

  KMoebius moebius(const Field& k) {
    for (;;) {
      FieldElement a = scalar(k), b = scalar(k), c = scalar(k), d = scalar(k);
      if (!(a * d - b * c).is_zero()) return KMoebius(a, b, c, d);
    }
  }
  KtMoebius kt_moebius(const Field& k, int max_degree) {
    for (;;) {
      RatFunc a = ratfunc(k, max_degree), b = ratfunc(k, max_degree), c = ratfunc(k, max_degree),
              d = ratfunc(k, max_degree);
      if (!(a * d - b * c).is_zero()) return KtMoebius(a, b, c, d);
    }
  }
  PlaneMap plane_map(const Field& k, int max_degree) { return PlaneMap(moebius(k), kt_moebius(k, max_degree)); }

  /// Random index set of the given size avoiding 2 and -2.
  IndexSet index_set(const Field& k, std::size_t size) {
    std::vector<FieldElement> v;
    const FieldElement two = k.from_int(2);
    while (v.size() < size) {
      FieldElement a = scalar(k);
      if (a == two || a == -two) continue;
      bool dup = false;
      for (const auto& b : v) dup = dup || a == b;
      if (!dup) v.push_back(a);
    }
    return IndexSet(k, std::move(v));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Same elements in any order.
template <class T>
bool same_set(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    bool found = false;
    for (const auto& y : b) found = found || x == y;
    if (!found) return false;
  }
  return true;
}

}  // namespace testing
