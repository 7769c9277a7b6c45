#pragma once

#include <array>
#include <string>
#include <vector>

#include "cremona/group.hpp"
#include "cremona/moebius.hpp"

namespace cremona {

/// Left action of gamma in PGL_2(k) on K = k(t): gamma(f) = f o gamma^-1.
RatFunc act(const KMoebius& gamma, const RatFunc& f);
/// Entrywise action on a homography over K.
KtMoebius act(const KMoebius& gamma, const KtMoebius& m);

/// Element (M, gamma) of PGL_2(K) x| PGL_2(k), K = k(t), with
/// (M1, g1)(M2, g2) = (M1 g1(M2), g1 g2).
///
/// As a map of the (z, t)-plane it is (z, t) -> (N(t)(z), gamma(t)) with
/// N = M o gamma, i.e. M = gamma(N); see PlaneMap::to_semidirect.
class SemidirectElt {
 public:
  SemidirectElt(KtMoebius m, KMoebius gamma);

  static SemidirectElt identity(const Field& k);
  /// (M, id).
  static SemidirectElt fiber(const KtMoebius& m);
  /// (id, gamma).
  static SemidirectElt base(const KMoebius& gamma);

  const KtMoebius& m() const { return m_; }
  const KMoebius& gamma() const { return gamma_; }
  const Field& field() const { return gamma_.field(); }
  bool is_identity() const { return m_.is_identity() && gamma_.is_identity(); }
  bool in_fiber_group() const { return gamma_.is_identity(); }

  friend SemidirectElt operator*(const SemidirectElt& x, const SemidirectElt& y);
  SemidirectElt inverse() const;
  SemidirectElt pow(unsigned e) const;
  /// c x c^-1.
  SemidirectElt conjugate_by(const SemidirectElt& c) const;

  friend bool operator==(const SemidirectElt& x, const SemidirectElt& y) {
    return x.m_ == y.m_ && x.gamma_ == y.gamma_;
  }
  std::string to_string() const;

 private:
  KtMoebius m_;
  KMoebius gamma_;
};

/// Values of a 1-cocycle of V_1 = {t, -t, 1/t, -1/t} in K^*, indexed in that
/// order.
struct CocycleV1 {
  std::array<RatFunc, 4> values;
};

/// The four elements of V_1 acting on t, in the order used by CocycleV1.
std::array<KMoebius, 4> v1_elements(const Field& k);

/// Throws unless lambda_{st} = lambda_s * s(lambda_t) for all pairs.
void check_cocycle(const CocycleV1& c);

/// mu with lambda = mu^-1 sigma(mu), for lambda of norm 1 under sigma of
/// order p. Candidates c = t^k, k <= 4 deg(lambda) + 4.
RatFunc hilbert90_cyclic(const RatFunc& lambda, const KMoebius& sigma, unsigned p);

/// mu with lambda_s = mu^-1 s(mu) for every s in V_1.
RatFunc trivialize_cocycle_V1(const CocycleV1& c);

/// The elementary abelian p-group generated by `gens`, of rank at most
/// max_rank.
ElementaryClosure<SemidirectElt> semidirect_closure(const std::vector<SemidirectElt>& gens, unsigned p,
                                                   unsigned max_rank);

/// C_p x C_p = {(zeta^i z, zeta^j t)}.
std::vector<SemidirectElt> cp_times_cp(const Field& k, unsigned p);
/// V_delta x V_1.
std::vector<SemidirectElt> vdelta_times_v1(const RatFunc& delta);

/// True when the two lists contain the same elements.
bool same_group(const std::vector<SemidirectElt>& a, const std::vector<SemidirectElt>& b);

/// Conjugator c with c G c^-1 = C_p x C_p, for G = (Z/p)^2 with cyclic
/// fiber part and cyclic image in PGL_2(k). G may be given by generators.
SemidirectElt normalize_rank2_odd(const std::vector<SemidirectElt>& g, unsigned p);

struct Rank4Normalization {
  SemidirectElt conjugator;
  RatFunc delta;  // V_1-invariant
};

/// Conjugator c with c G c^-1 = V_delta x V_1 for G = (Z/2)^4 whose fiber
/// part and image are Klein groups.
Rank4Normalization normalize_rank4_two(const std::vector<SemidirectElt>& g);

}  // namespace cremona
