#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cremona {

enum class FieldTag { Rationals, PrimeField, Cyclotomic };

namespace detail {
struct FieldSpec;
}

class FieldElement;

/// A computable base field: the rationals, a prime field F_q (q > 3), or the
/// cyclotomic field Q(w) with w a primitive n-th root of unity, represented
/// modulo the n-th cyclotomic polynomial.
///
/// Fields are cheap handles; two handles compare equal when they describe the
/// same field, whether or not they share storage.
class Field {
 public:
  static Field rationals();
  static Field prime(std::uint64_t q);
  static Field cyclotomic(unsigned n);
  /// Accepts "QQ", "Fp:<q>" and "cyclo:<n>".
  static Field parse(std::string_view text);

  FieldTag tag() const;
  std::uint64_t modulus() const;
  unsigned cyclotomic_order() const;
  /// Dimension over the prime field.
  unsigned degree() const;
  std::uint64_t characteristic() const;
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long value) const;
  FieldElement from_rational(const mpq_class& value) const;
  /// The cyclotomic generator w; the element 1 for the other kinds.
  FieldElement generator() const;

  /// A primitive m-th root of unity when the field contains one. The choice
  /// is deterministic: w^(n/m) for cyclotomic fields, the smallest residue for
  /// prime fields.
  std::optional<FieldElement> primitive_root_of_unity(unsigned m) const;

  /// All elements of F_q in increasing order. Only for prime fields.
  std::vector<FieldElement> elements() const;

  const detail::FieldSpec& spec() const { return *spec_; }

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldSpec> spec) : spec_(std::move(spec)) {}
  std::shared_ptr<const detail::FieldSpec> spec_;
};

class FieldElement {
 public:
  /// The rational zero. Meant for containers; real code builds elements
  /// through a Field.
  FieldElement();

  static FieldElement zero(const Field& k) { return k.zero(); }
  static FieldElement one(const Field& k) { return k.one(); }
  static FieldElement from_int(const Field& k, long long v) { return k.from_int(v); }
  static FieldElement from_base(const FieldElement& v) { return v; }

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  /// Some g in the field with g^p equal to this element, or nothing. Over
  /// cyclotomic fields only roots of the form (rational)*(root of unity) and
  /// square roots in quadratic cyclotomic fields are found.
  std::optional<FieldElement> pth_root(unsigned p) const;

  /// The value as a rational number when it lies in the prime field of a
  /// characteristic-zero field.
  std::optional<mpq_class> to_rational() const;
  std::uint64_t residue() const { return residue_; }
  const std::vector<mpq_class>& coordinates() const { return coords_; }

  /// Canonical text; parseable by the expression parser with the cyclotomic
  /// generator spelled "w".
  std::string to_string() const;
  /// True when to_string() is a single signed atom that can be embedded in a
  /// product without parentheses.
  bool is_atomic() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Total order used for canonical representatives: numeric on Q, least
  /// residue on F_q, lexicographic on the coordinate vector of Q(w).
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  friend class Field;
  explicit FieldElement(Field k);
  void check_same_field(const FieldElement& b) const;
  void reduce();

  Field field_;
  std::vector<mpq_class> coords_;
  std::uint64_t residue_ = 0;
};

/// Point of the projective line over a base field, kept in the normal form
/// (x : 1) or (1 : 0).
class ProjectivePoint {
 public:
  static ProjectivePoint finite(FieldElement x);
  static ProjectivePoint infinity(const Field& k);
  /// Normalizes (x : w); both zero is rejected.
  static ProjectivePoint homogeneous(const FieldElement& x, const FieldElement& w);

  bool is_infinity() const { return infinite_; }
  /// The affine coordinate; must not be called at infinity.
  const FieldElement& value() const;
  FieldElement x() const;
  FieldElement w() const;
  const Field& field() const { return x_.field(); }
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);
  /// Finite points in field order, infinity last.
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  ProjectivePoint(FieldElement x, bool infinite) : x_(std::move(x)), infinite_(infinite) {}
  FieldElement x_;
  bool infinite_ = false;
};

}  // namespace cremona
