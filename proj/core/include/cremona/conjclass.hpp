#pragma once

#include <array>
#include <string>
#include <vector>

#include "cremona/birmap.hpp"

namespace cremona {

/// Finite subset of k minus {2, -2}, kept sorted.
class IndexSet {
 public:
  explicit IndexSet(const Field& k) : field_(k) {}
  IndexSet(const Field& k, std::vector<FieldElement> elements);

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.elements_ == b.elements_; }
  /// Cardinality first, then the sorted element lists lexicographically.
  friend bool operator<(const IndexSet& a, const IndexSet& b);
  std::string to_string() const;

 private:
  Field field_;
  std::vector<FieldElement> elements_;
};

/// prod_{a in I} (s - a).
KPoly index_polynomial(const IndexSet& i);
/// P(x) = prod_{a in I} (x^2 + x^-2 - a).
RatFunc index_function(const IndexSet& i);

/// <(-x, y), (1/x, y), (x, -y), (x, delta(x)/y)> for delta invariant under V_1.
ElementaryGroup vdelta_v1_group(const RatFunc& delta);
/// G_I: vdelta_v1_group(P).
ElementaryGroup build_GI(const IndexSet& i);

/// The six homographies of the u-line permuting {2, -2, infinity}. Entry 0 is
/// the identity; the images of (2, -2, infinity) follow the permutations in
/// lexicographic order of (2, -2, infinity) -> positions.
std::array<KMoebius, 6> s3_elements(const Field& k);

struct ConjClassC1 {
  IndexSet canonical;
  std::vector<IndexSet> orbit;  // distinct images, sorted
};

ConjClassC1 canonicalize(const IndexSet& i);

bool are_conjugate_c1(const IndexSet& a, const IndexSet& b);

/// I mod S_3 from a group of order 16 with image V_1 on the x-line and
/// fiber part V_delta.
ConjClassC1 recover_I(const ElementaryGroup& g);

/// delta = unit * R(s) * mu^2 with s = t^2 + t^-2, R squarefree and prime to
/// s - 2 and s + 2.
struct ReducedDelta {
  RatFunc delta;              // unit * R(t^2 + t^-2)
  KPoly q;                    // unit * R, in s
  SemidirectElt conjugator;   // z -> z/mu, taking V_delta x V_1 to V_delta' x V_1
};

ReducedDelta reduce_delta(const RatFunc& delta);

struct C1Classification {
  ConjClassC1 cls;
  RatFunc delta;              // reduced discriminant of the normal form
  SemidirectElt conjugator;   // takes the input group to V_delta x V_1
};

/// Full pipeline for (Z/2)^4 in de Jonquieres form: normalize_rank4_two,
/// reduce_delta, then recover_I on the normal form.
C1Classification classify_c1(const std::vector<PlaneMap>& gens);

/// (x, y) -> (x, y F(x^2 + x^-2)): multiplies delta by F(s)^2.
PlaneMap square_move(const RatFunc& f);
/// (x, y) -> (x, y (x + sign/x)): multiplies delta by s + 2 sign.
PlaneMap plus_minus_move(const Field& k, int sign);
/// Elements of the normalizer of V_1 in PGL_2(k) acting on the x-line.
std::vector<KMoebius> v1_normalizer(const Field& k);

}  // namespace cremona
