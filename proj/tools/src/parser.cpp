#include "parser.hpp"

#include <gmpxx.h>

#include <cctype>
#include <set>

namespace cremona::cli {
namespace {

constexpr const char* kModule = "cli";

struct Token {
  enum class Kind { Number, Name, Op, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
  fail(ErrorKind::SyntaxError, kModule, "column " + std::to_string(pos) + ": " + what);
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Kind::Number, std::string(src.substr(start, i - start)), start + 1});
    } else if (std::isalpha(c)) {
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Kind::Name, std::string(src.substr(start, i - start)), start + 1});
    } else if (std::string_view("+-*/^(),").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::Op, std::string(1, static_cast<char>(c)), start + 1});
      ++i;
    } else {
      syntax_error(start + 1, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", src.size() + 1});
  return out;
}

ExprPtr node(Expr::Kind kind, std::size_t pos, std::vector<ExprPtr> kids, std::string text = "") {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->pos = pos;
  e->text = std::move(text);
  e->kids = std::move(kids);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  ExprPtr whole_expr() {
    ExprPtr e = expr();
    expect_end();
    return e;
  }

  ExprPtr whole_pair() {
    const std::size_t pos = peek().pos;
    expect("(");
    ExprPtr a = expr();
    expect(",");
    ExprPtr b = expr();
    expect(")");
    expect_end();
    return node(Expr::Kind::Pair, pos, {a, b});
  }

  std::vector<ExprPtr> whole_list() {
    std::vector<ExprPtr> out;
    if (peek().kind == Token::Kind::End) return out;
    out.push_back(expr());
    while (accept(",")) out.push_back(expr());
    expect_end();
    return out;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }
  bool accept(const char* op) {
    if (!is_op(op)) return false;
    ++at_;
    return true;
  }
  void expect(const char* op) {
    if (!accept(op)) syntax_error(peek().pos, std::string("expected '") + op + "'" + found());
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) syntax_error(peek().pos, "unexpected '" + peek().text + "'");
  }
  std::string found() const {
    return peek().kind == Token::Kind::End ? " at end of input" : ", found '" + peek().text + "'";
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept("+")) {
        lhs = node(Expr::Kind::Add, pos, {lhs, term()});
      } else if (accept("-")) {
        lhs = node(Expr::Kind::Sub, pos, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept("*")) {
        lhs = node(Expr::Kind::Mul, pos, {lhs, unary()});
      } else if (accept("/")) {
        lhs = node(Expr::Kind::Div, pos, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    const std::size_t pos = peek().pos;
    if (accept("-")) return node(Expr::Kind::Neg, pos, {unary()});
    return factor();
  }

  ExprPtr factor() {
    ExprPtr b = base();
    const std::size_t pos = peek().pos;
    if (!accept("^")) return b;
    const bool negative = accept("-");
    if (peek().kind != Token::Kind::Number) syntax_error(peek().pos, "expected an integer exponent" + found());
    const std::string digits = peek().text;
    if (digits.size() > 9) syntax_error(peek().pos, "exponent too large");
    ++at_;
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->pos = pos;
    e->exponent = std::stoll(digits) * (negative ? -1 : 1);
    e->kids = {b};
    return e;
  }

  ExprPtr base() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) {
      ++at_;
      return node(Expr::Kind::Number, t.pos, {}, t.text);
    }
    if (t.kind == Token::Kind::Name) {
      ++at_;
      return node(Expr::Kind::Name, t.pos, {}, t.text);
    }
    if (accept("(")) {
      ExprPtr e = expr();
      if (is_op(",")) syntax_error(peek().pos, "a pair is only allowed as a whole map");
      expect(")");
      return e;
    }
    syntax_error(t.pos, "expected a number, a name or '('" + found());
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

void collect_names(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Name) out.insert(e.text);
  for (const auto& k : e.kids) collect_names(*k, out);
}

template <class T, class Leaf>
T evaluate(const Expr& e, const Leaf& leaf) {
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Name:
      return leaf(e);
    case Expr::Kind::Neg:
      return -evaluate<T>(*e.kids[0], leaf);
    case Expr::Kind::Add:
      return evaluate<T>(*e.kids[0], leaf) + evaluate<T>(*e.kids[1], leaf);
    case Expr::Kind::Sub:
      return evaluate<T>(*e.kids[0], leaf) - evaluate<T>(*e.kids[1], leaf);
    case Expr::Kind::Mul:
      return evaluate<T>(*e.kids[0], leaf) * evaluate<T>(*e.kids[1], leaf);
    case Expr::Kind::Div: {
      T d = evaluate<T>(*e.kids[1], leaf);
      if (d.is_zero()) fail(ErrorKind::DivisionByZero, kModule, "column " + std::to_string(e.pos) + ": division by zero");
      return evaluate<T>(*e.kids[0], leaf) / d;
    }
    case Expr::Kind::Pow: {
      T b = evaluate<T>(*e.kids[0], leaf);
      if (e.exponent < 0 && b.is_zero()) {
        fail(ErrorKind::DivisionByZero, kModule, "column " + std::to_string(e.pos) + ": negative power of zero");
      }
      return b.pow(e.exponent);
    }
    case Expr::Kind::Pair:
      break;
  }
  syntax_error(e.pos, "a pair is not a value");
}

FieldElement constant_leaf(const Expr& e, const Field& k) {
  if (e.kind == Expr::Kind::Number) return k.from_rational(mpq_class(e.text));
  if (e.text == "w") {
    if (k.tag() != FieldTag::Cyclotomic) syntax_error(e.pos, "'w' names the generator of a cyclotomic field");
    return k.generator();
  }
  syntax_error(e.pos, "unknown name '" + e.text + "'");
}

FieldElement value_of(const Expr& e, const Field& k) {
  return evaluate<FieldElement>(e, [&](const Expr& leaf) { return constant_leaf(leaf, k); });
}

/// Two-variable value; `base` and `fiber` name the variables.
BiRatFunc bivalue(const Expr& e, const Field& k, const std::string& base, const std::string& fiber) {
  return evaluate<BiRatFunc>(e, [&](const Expr& leaf) {
    if (leaf.kind == Expr::Kind::Name && leaf.text == base) return BiRatFunc::constant(RatFunc::variable(k));
    if (leaf.kind == Expr::Kind::Name && leaf.text == fiber) return BiRatFunc::variable(k);
    return BiRatFunc::constant(RatFunc::constant(constant_leaf(leaf, k)));
  });
}

[[noreturn]] void shape_error(const std::string& what) { fail(ErrorKind::ShapeError, kModule, what); }

}  // namespace

std::string Expr::to_string() const {
  auto kid = [&](std::size_t i) { return kids[i]->to_string(); };
  switch (kind) {
    case Kind::Number:
    case Kind::Name:
      return text;
    case Kind::Neg:
      return "(-" + kid(0) + ")";
    case Kind::Add:
      return "(" + kid(0) + " + " + kid(1) + ")";
    case Kind::Sub:
      return "(" + kid(0) + " - " + kid(1) + ")";
    case Kind::Mul:
      return "(" + kid(0) + "*" + kid(1) + ")";
    case Kind::Div:
      return "(" + kid(0) + "/" + kid(1) + ")";
    case Kind::Pow:
      return "(" + kid(0) + "^" + std::to_string(exponent) + ")";
    case Kind::Pair:
      return "(" + kid(0) + ", " + kid(1) + ")";
  }
  return {};
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.exponent != b.exponent || a.kids.size() != b.kids.size()) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    if (!same_tree(*a.kids[i], *b.kids[i])) return false;
  }
  return true;
}

ExprPtr parse_expr(std::string_view src) { return Parser(src).whole_expr(); }
ExprPtr parse_pair(std::string_view src) { return Parser(src).whole_pair(); }

FieldElement parse_value(std::string_view src, const Field& k) { return value_of(*parse_expr(src), k); }

std::vector<FieldElement> parse_values(std::string_view src, const Field& k) {
  std::vector<FieldElement> out;
  for (const auto& e : Parser(src).whole_list()) out.push_back(value_of(*e, k));
  return out;
}

BiRatFunc parse_bivariate(std::string_view src, const Field& k) {
  ExprPtr e = parse_expr(src);
  std::set<std::string> names;
  collect_names(*e, names);
  const bool zt = names.count("z") || names.count("t");
  if (zt && (names.count("x") || names.count("y"))) syntax_error(e->pos, "mixes the variables x, y with z, t");
  return zt ? bivalue(*e, k, "t", "z") : bivalue(*e, k, "x", "y");
}

PlaneMap parse_map(std::string_view src, const Field& k) {
  ExprPtr pair = parse_pair(src);
  std::set<std::string> names;
  collect_names(*pair, names);
  const bool zt = names.count("z") || names.count("t");
  if (zt && (names.count("x") || names.count("y"))) syntax_error(pair->pos, "mixes the variables x, y with z, t");
  // (X, Y) lists the base image first; (Z, T) lists the fiber image first.
  const Expr& base_part = *pair->kids[zt ? 1 : 0];
  const Expr& fiber_part = *pair->kids[zt ? 0 : 1];
  const std::string bv = zt ? "t" : "x", fv = zt ? "z" : "y";
  const BiRatFunc b = bivalue(base_part, k, bv, fv);
  const BiRatFunc f = bivalue(fiber_part, k, bv, fv);

  if (!b.is_constant()) shape_error("the " + bv + "-component depends on " + fv);
  const RatFunc g = b.constant_value();
  if (g.num().degree() > 1 || g.den().degree() > 1 || g.is_constant()) {
    shape_error("the " + bv + "-component is not a homography of " + bv);
  }
  if (f.num().degree() > 1 || f.den().degree() > 1 || f.is_constant()) {
    shape_error("the " + fv + "-component is not a homography of " + fv + " over k(" + bv + ")");
  }
  KMoebius gamma(g.num().coeff(1), g.num().coeff(0), g.den().coeff(1), g.den().coeff(0));
  KtMoebius m(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0));
  return PlaneMap(std::move(gamma), std::move(m));
}

}  // namespace cremona::cli
