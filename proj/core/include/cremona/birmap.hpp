#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cremona/algorithms.hpp"
#include "cremona/group.hpp"
#include "cremona/semidirect.hpp"

namespace cremona {

/// f o g for f in k(x) and a homography g of the x-line.
RatFunc substitute(const RatFunc& f, const KMoebius& g);

/// De Jonquieres map (x, y) -> (gamma(x), M(x)(y)).
class PlaneMap {
 public:
  PlaneMap(KMoebius gamma, KtMoebius m);

  static PlaneMap identity(const Field& k);
  /// (x, y) -> (gamma(x), y).
  static PlaneMap base(const KMoebius& gamma);
  /// (x, y) -> (x, M(x)(y)).
  static PlaneMap fiber(const KtMoebius& m);
  /// (x, y) -> (a x, b y).
  static PlaneMap diagonal(const FieldElement& a, const FieldElement& b);
  /// The same map in the semidirect model, (z, t) = (y, x).
  static PlaneMap from_semidirect(const SemidirectElt& s);
  SemidirectElt to_semidirect() const;

  const KMoebius& gamma() const { return gamma_; }
  const KtMoebius& m() const { return m_; }
  const Field& field() const { return gamma_.field(); }
  bool is_identity() const { return gamma_.is_identity() && m_.is_identity(); }

  /// Composite f o g.
  friend PlaneMap operator*(const PlaneMap& f, const PlaneMap& g);
  PlaneMap inverse() const;
  PlaneMap pow(unsigned e) const;
  /// h o f o h^-1.
  PlaneMap conjugate_by(const PlaneMap& h) const;

  friend bool operator==(const PlaneMap& f, const PlaneMap& g) { return f.gamma_ == g.gamma_ && f.m_ == g.m_; }
  /// "(X, Y)" in the expression grammar of the command line tool.
  std::string to_string() const;

 private:
  KMoebius gamma_;
  KtMoebius m_;
};

PlaneMap compose(const PlaneMap& f, const PlaneMap& g);

/// sigma_f : (x, y) -> (x, y f(x^p)).
PlaneMap sigma_f(const RatFunc& f, unsigned p);

/// True for maps (x, y) -> (a x, b y).
bool is_diagonal_shape(const PlaneMap& f);

/// (Z/p)^r given by all its elements; generators[i] has exponent vector e_i
/// and element sum_i e_i p^i is prod_i generators[i]^e_i.
struct ElementaryGroup {
  unsigned p = 0;
  unsigned rank = 0;
  std::vector<PlaneMap> elements;
  std::vector<PlaneMap> generators;
};

ElementaryGroup closure(const std::vector<PlaneMap>& gens, unsigned p, unsigned max_rank);

enum class NFKind { Empty, Hyperelliptic };

/// Normalized fixed locus of an involution, recorded by its branch divisor.
struct NFData {
  NFKind kind = NFKind::Empty;
  KPoly branch;                    // monic, squarefree; 1 when empty
  bool infinity_branched = false;  // odd-degree discriminant
  unsigned genus = 0;

  unsigned branch_points() const { return static_cast<unsigned>(branch.degree()) + (infinity_branched ? 1u : 0u); }
  std::string to_string(const std::string& var = "x") const;
};

/// Curve Y^2 = delta(x) up to twist: Empty when of genus 0.
NFData nf_from_discriminant(const RatFunc& delta);

/// Non-rational part of the fixed locus of an involution.
NFData fixed_curve(const PlaneMap& sigma);

/// fixed_curve of every non-identity element of a 2-group, by element index.
std::vector<std::pair<std::size_t, NFData>> nf_profile(const ElementaryGroup& g);

}  // namespace cremona
