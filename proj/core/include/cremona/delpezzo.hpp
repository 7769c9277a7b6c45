#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cremona/birmap.hpp"

namespace cremona {

/// Smooth intersection of sum X_i^2 = 0 and sum lambda_i X_i^2 = 0 in P^4.
class QuarticDP {
 public:
  explicit QuarticDP(std::array<FieldElement, 5> lambdas);

  const std::array<FieldElement, 5>& lambdas() const { return lambdas_; }
  const Field& field() const { return lambdas_[0].field(); }

 private:
  std::array<FieldElement, 5> lambdas_;
};

/// Sign change on a subset of the coordinates of P^4, modulo the global sign.
/// The subset is stored with at most two elements.
class DiagInvolution {
 public:
  explicit DiagInvolution(unsigned mask = 0);
  /// sigma_l: X_l -> -X_l.
  static DiagInvolution reflection(unsigned l);

  unsigned mask() const { return mask_; }
  int sign(unsigned i) const { return (mask_ >> i) & 1u ? -1 : 1; }
  bool is_identity() const { return mask_ == 0; }
  /// Dimensions of the two eigenspaces in k^5, larger first.
  std::pair<unsigned, unsigned> eigenspace_dims() const;
  /// Fixed locus contains a hyperplane of P^4.
  bool fixes_hyperplane() const { return eigenspace_dims().first == 4; }

  friend DiagInvolution operator*(const DiagInvolution& a, const DiagInvolution& b) {
    return DiagInvolution(a.mask_ ^ b.mask_);
  }
  friend bool operator==(const DiagInvolution& a, const DiagInvolution& b) { return a.mask_ == b.mask_; }
  std::string to_string() const;

 private:
  unsigned mask_;
};

struct SingularMember {
  FieldElement parameter;     // s with q_0 - s q_inf singular
  unsigned rank;
  std::vector<unsigned> kernel;  // coordinate vectors spanning the kernel
};

/// det(q_0 - s q_inf) = prod (lambda_i - s).
KPoly pencil_determinant(const QuarticDP& s);
unsigned pencil_rank(const QuarticDP& s, const FieldElement& param);
std::vector<SingularMember> pencil_singular(const QuarticDP& s);

struct GSReport {
  std::vector<DiagInvolution> elements;  // elements[0] is the identity
  bool preserves_quadrics = false;
  unsigned hyperplane_fixing = 0;
  bool reflections_fix_point_and_hyperplane = false;
};

GSReport GS_group(const QuarticDP& s);

/// Normalized fixed locus on S of every non-identity element of G_S, indexed
/// as in GS_group.
std::vector<std::pair<std::size_t, NFData>> gs_nf_profile(const QuarticDP& s);

/// j(x) = 2^8 (x^2 - x + 1)^3 / (x^2 (x - 1)^2), infinity on {0, 1, infinity}.
ProjectivePoint jfun(const ProjectivePoint& x);
FieldElement jfun(const FieldElement& x);
/// j as an element of k(x).
RatFunc jfun_rational(const Field& k);

/// ((a - c)(b - d)) / ((a - d)(b - c)).
ProjectivePoint cross_ratio(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c,
                            const ProjectivePoint& d);

/// j of the four points other than the l-th.
ProjectivePoint branch_j(const std::array<ProjectivePoint, 5>& points, unsigned l);
ProjectivePoint branch_j(const QuarticDP& s, unsigned l);

using JTuple = std::array<ProjectivePoint, 5>;

/// J(lambda, mu) for the 5-tuple (lambda, mu, 1, 0, infinity).
JTuple Jmap(const FieldElement& lambda, const FieldElement& mu);

/// The five branch j-invariants, sorted.
std::vector<ProjectivePoint> Jbar(const QuarticDP& s);

/// Jacobian of (j(l/m), j((l-1)/(m-1))) against j'(l/m) j'((l-1)/(m-1)) (m - l) / (m^2 (m - 1)^2),
/// the right side multiplied by rhs_factor. Symbolic over k(l)(m).
bool jacobian_identity_symbolic(const Field& k, long long rhs_factor = 1);
/// Same identity at random points, derivatives by dual numbers.
bool jacobian_identity_pointwise(const Field& k, unsigned samples, std::uint64_t seed, long long rhs_factor = 1);
/// Symbolic check over the rationals.
bool jacobian_identity_check();

/// zeta with zeta^3 = -1, zeta != -1 (the smallest such residue).
FieldElement fiber_zeta(const Field& k);

/// All (lambda, mu) over F_q with Jmap(lambda, mu) = Jmap(alpha, zeta).
std::vector<std::pair<FieldElement, FieldElement>> fiber_search(const FieldElement& alpha, std::uint64_t q);

struct FiberStats {
  std::uint64_t q = 0;
  FieldElement zeta;
  unsigned alphas = 0;      // alpha with (alpha, zeta) a valid pair
  unsigned singletons = 0;  // alpha whose fiber is {(alpha, zeta)}
  std::vector<FieldElement> singleton_alphas;
  double fraction() const { return alphas ? static_cast<double>(singletons) / alphas : 0.0; }
};

/// fiber_search for every admissible alpha over F_q.
FiberStats fiber_statistics(std::uint64_t q);

struct CharacterReport {
  unsigned group_order = 0;
  bool exponent_ok = false;          // every non-identity element has order p
  bool preserves_form = false;
  bool smooth = false;
  unsigned monomials = 0;
  unsigned invariant = 0;            // monomials with trivial character
  unsigned semi_invariant_lines = 0; // nontrivial characters, each of multiplicity one
  bool distinct_characters = false;
};

/// (mu_3)^4 / mu_3 on cubic forms in four variables and the Fermat cubic.
CharacterReport fermat_cubic_check(const Field& k);
/// (mu_2)^5 on quadratic forms in five variables.
CharacterReport quadric_character_check();
/// Quadratic monomials in five variables invariant under the given signs.
unsigned invariant_quadrics(const std::array<int, 5>& signs);

struct WeylEntry {
  unsigned ell;
  std::string root_system;
  std::vector<std::pair<unsigned, unsigned>> factorization;  // (prime, exponent)
  std::uint64_t order;
};

const std::vector<WeylEntry>& weyl_table();
/// p^r divides |W(R_l)|.
bool weyl_table_query(unsigned ell, unsigned p, unsigned r);

/// Largest r with p^(r-1) dividing 2g - 2.
unsigned hurwitz_max_rank(unsigned g, unsigned p);

}  // namespace cremona
