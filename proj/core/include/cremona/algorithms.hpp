#pragma once

#include <optional>
#include <vector>

#include "cremona/field.hpp"
#include "cremona/poly.hpp"
#include "cremona/ratfunc.hpp"

namespace cremona {

using KPoly = Poly<FieldElement>;

struct SquarefreeFactor {
  KPoly factor;  // monic, squarefree
  unsigned multiplicity;
};

/// f = unit * prod factor^multiplicity, sorted by multiplicity.
struct SquarefreeDecomposition {
  FieldElement unit;
  std::vector<SquarefreeFactor> factors;
};

/// Yun's algorithm. Needs characteristic 0 or larger than deg f.
SquarefreeDecomposition yun_squarefree(const KPoly& f);

/// Product of the factors of odd multiplicity, monic. Two polynomials whose
/// ratio is a square times a constant share this part.
KPoly odd_part(const KPoly& f);

/// g with g^p == f, or nothing when f is not a p-th power over the base field.
std::optional<RatFunc> pth_power_root(const RatFunc& f, unsigned p);

/// For S self-reciprocal of even degree 2m: the T of degree m with
/// S(v) = v^m T(v + 1/v).
KPoly palindromic_reduce(const KPoly& s);
/// Same, reading s as a polynomial of formal degree 2m (leading zeros allowed).
KPoly palindromic_reduce(const KPoly& s, std::size_t formal_degree);

/// For delta invariant under t -> -t and t -> 1/t, the Q with
/// delta(t) = Q(t^2 + t^-2).
RatFunc rewrite_in_invariant(const RatFunc& delta);

/// The element t^2 + t^-2 of k(t).
RatFunc v1_invariant(const Field& k);

struct RootSplit {
  std::vector<FieldElement> roots;  // with multiplicity, sorted
  KPoly remainder;                  // no roots left in k (up to the documented search limits)
};

/// Splits off linear factors: f = remainder * prod (x - r).
RootSplit roots_in_k(const KPoly& f);

}  // namespace cremona
