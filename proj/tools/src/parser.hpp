#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/birmap.hpp"

namespace cremona::cli {

/// Syntax tree of the expression grammar
///   map    := '(' expr ',' expr ')'
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | factor
///   factor := base ('^' '-'? int)?
///   base   := int | name | '(' expr ')'
/// Names are the variables x, y (or z, t) and the cyclotomic generator w.
struct Expr {
  enum class Kind { Number, Name, Neg, Add, Sub, Mul, Div, Pow, Pair };

  Kind kind;
  std::string text;       // digits or name
  long long exponent = 0; // Pow
  std::size_t pos = 0;    // column of the first character, from 1
  std::vector<std::shared_ptr<const Expr>> kids;

  /// Fully parenthesized form, reparsing to the same tree.
  std::string to_string() const;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Structural equality, ignoring positions.
bool same_tree(const Expr& a, const Expr& b);

ExprPtr parse_expr(std::string_view src);
/// A top-level pair "(e1, e2)".
ExprPtr parse_pair(std::string_view src);

/// Value of a variable-free expression.
FieldElement parse_value(std::string_view src, const Field& k);
/// Comma-separated values; the empty string gives none.
std::vector<FieldElement> parse_values(std::string_view src, const Field& k);

/// Expression in x, y (or t, z) as an element of k(x)(y).
BiRatFunc parse_bivariate(std::string_view src, const Field& k);

/// Plane map written "(X, Y)" in x, y, or "(Z, T)" in the fiber coordinate z
/// and base coordinate t. Throws ShapeError outside de Jonquieres shape.
PlaneMap parse_map(std::string_view src, const Field& k);

}  // namespace cremona::cli
