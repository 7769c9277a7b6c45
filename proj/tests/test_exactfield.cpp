#include "doctest.h"
#include "support.hpp"

using namespace cremona;
using testing::Gen;

namespace {

KPoly ints(const Field& k, std::initializer_list<long long> c) { return KPoly::from_ints(k, c); }

}  // namespace

TEST_CASE("field parsing and names") {
  CHECK(Field::parse("QQ").name() == "QQ");
  CHECK(Field::parse("Fp:101").modulus() == 101);
  CHECK(Field::parse("cyclo:3").cyclotomic_order() == 3);
  CHECK_THROWS_AS(Field::parse("Fp:9"), Error);
  CHECK_THROWS_AS(Field::parse("Fp:3"), Error);
  CHECK_THROWS_AS(Field::parse("RR"), Error);
  CHECK(Field::prime(31) == Field::parse("Fp:31"));
  CHECK_FALSE(Field::prime(31) == Field::prime(37));
}

TEST_CASE("scalar examples") {
  const Field qq = Field::rationals();
  CHECK(qq.from_rational(mpq_class(2, 3)) + qq.from_rational(mpq_class(1, 3)) == qq.one());

  const Field f7 = Field::prime(7);
  CHECK((f7.from_int(5) * f7.from_int(9)).residue() == 3);
  CHECK(f7.from_int(-1).residue() == 6);

  const Field c3 = Field::cyclotomic(3);
  const FieldElement w = c3.generator();
  CHECK(w * w == -w - c3.one());
  CHECK(w * (w * w) == c3.one());
  CHECK(w.to_string() == "w");
  CHECK((w * w).to_string() == "-w - 1");
}

TEST_CASE("scalar errors") {
  const Field qq = Field::rationals();
  CHECK_THROWS_AS(qq.one() / qq.zero(), Error);
  try {
    (void)(qq.one() + Field::prime(7).one());
    FAIL("mixed fields accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("field axioms on random elements") {
  Gen g(11);
  for (const Field& k : {Field::rationals(), Field::prime(101), Field::cyclotomic(3), Field::cyclotomic(5)}) {
    for (int i = 0; i < 100; ++i) {
      const FieldElement a = g.scalar(k), b = g.scalar(k), c = g.scalar(k);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == k.zero());
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("total order") {
  const Field qq = Field::rationals();
  CHECK(qq.from_int(-6) < qq.zero());
  CHECK(qq.from_rational(mpq_class(-10, 3)) < qq.from_int(-3));
  const Field f = Field::prime(31);
  CHECK(f.from_int(30) > f.from_int(1));
  CHECK(f.from_int(-1) > f.from_int(2));
}

TEST_CASE("primitive roots of unity") {
  const Field f31 = Field::prime(31);
  auto z = f31.primitive_root_of_unity(3);
  REQUIRE(z);
  CHECK(z->pow(3) == f31.one());
  CHECK_FALSE(*z == f31.one());
  CHECK_FALSE(Field::rationals().primitive_root_of_unity(3));
  CHECK(Field::rationals().primitive_root_of_unity(2) == Field::rationals().from_int(-1));
  const Field c12 = Field::cyclotomic(12);
  auto i = c12.primitive_root_of_unity(4);
  REQUIRE(i);
  CHECK(*i * *i == c12.from_int(-1));
  CHECK(*i == c12.generator().pow(3));
  const Field c3 = Field::cyclotomic(3);
  CHECK(c3.primitive_root_of_unity(3) == c3.generator());
  const FieldElement z6 = *c3.primitive_root_of_unity(6);
  CHECK(z6.pow(6).is_one());
  CHECK_FALSE(z6.pow(2).is_one());
  CHECK_FALSE(z6.pow(3).is_one());
}

TEST_CASE("polynomial division and gcd") {
  Gen g(12);
  for (const Field& k : {Field::rationals(), Field::prime(101)}) {
    for (int i = 0; i < 60; ++i) {
      const KPoly a = g.nonzero_poly(k, 5), b = g.nonzero_poly(k, 4), c = g.nonzero_poly(k, 3);
      const KPoly d = gcd(a * c, b * c);
      CHECK(((a * c) % d).is_zero());
      CHECK(((b * c) % d).is_zero());
      CHECK(((d % c.monic()).is_zero() || c.degree() == 0));
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("rational functions are reduced") {
  Gen g(13);
  const Field k = Field::prime(101);
  for (int i = 0; i < 60; ++i) {
    const RatFunc f = g.ratfunc(k, 4), h = g.nonzero_ratfunc(k, 4);
    CHECK((f / h) * h == f);
    CHECK(gcd(f.num(), f.den()).degree() == 0);
    CHECK(f.den().leading() == k.one());
    const RatFunc x = RatFunc::variable(k);
    CHECK(f.compose(x) == f);
  }
  CHECK_THROWS_AS(RatFunc(ints(k, {1}), KPoly(k)), Error);
}

TEST_CASE("rational function printing") {
  const Field qq = Field::rationals();
  const RatFunc t = RatFunc::variable(qq);
  CHECK((t * t + (t * t).inverse()).to_string("x") == "(x^4 + 1)/x^2");
  CHECK((-t).to_string("t") == "-t");
  CHECK(RatFunc::from_int(qq, 3).to_string() == "3");
}

TEST_CASE("yun_squarefree examples") {
  const Field qq = Field::rationals();
  {
    auto d = yun_squarefree(ints(qq, {0, 0, 1}));
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].factor == ints(qq, {0, 1}));
    CHECK(d.factors[0].multiplicity == 2);
  }
  {
    auto d = yun_squarefree(ints(qq, {-1, 1}).pow(2) * ints(qq, {1, 1}));
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0].factor == ints(qq, {1, 1}));
    CHECK(d.factors[0].multiplicity == 1);
    CHECK(d.factors[1].factor == ints(qq, {-1, 1}));
    CHECK(d.factors[1].multiplicity == 2);
  }
  {
    auto d = yun_squarefree(ints(qq, {1, 0, -2, 0, 1}));
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].factor == ints(qq, {-1, 0, 1}));
    CHECK(d.factors[0].multiplicity == 2);
  }
}

TEST_CASE("yun_squarefree reconstruction") {
  Gen g(14);
  for (const Field& k : {Field::rationals(), Field::prime(101)}) {
    for (int i = 0; i < 50; ++i) {
      KPoly f = g.nonzero_poly(k, 3) * g.nonzero_poly(k, 2).pow(2) * g.nonzero_poly(k, 1).pow(3);
      if (f.degree() >= static_cast<int>(k.characteristic()) && k.characteristic() != 0) continue;
      const auto d = yun_squarefree(f);
      KPoly back = KPoly::constant(d.unit);
      for (const auto& sf : d.factors) {
        back *= sf.factor.pow(sf.multiplicity);
        CHECK(gcd(sf.factor, sf.factor.derivative()).degree() == 0);
      }
      CHECK(back == f);
      for (std::size_t a = 0; a < d.factors.size(); ++a) {
        for (std::size_t b = a + 1; b < d.factors.size(); ++b) {
          CHECK(gcd(d.factors[a].factor, d.factors[b].factor).degree() == 0);
          CHECK(d.factors[a].multiplicity != d.factors[b].multiplicity);
        }
      }
    }
  }
}

TEST_CASE("pth_power_root examples") {
  const Field qq = Field::rationals();
  const RatFunc t = RatFunc::variable(qq);
  CHECK(pth_power_root(t.pow(3), 3) == t);
  const RatFunc u = (t + RatFunc::one(qq)) / t;
  auto r = pth_power_root(u * u, 2);
  REQUIRE(r);
  CHECK((*r) * (*r) == u * u);
  CHECK_FALSE(pth_power_root(t, 2));
  CHECK_FALSE(pth_power_root(RatFunc::from_int(qq, 2) * t * t, 2));
  CHECK_FALSE(pth_power_root(RatFunc::from_int(qq, -1), 2));
}

TEST_CASE("pth_power_root round trip") {
  Gen g(15);
  for (const Field& k : {Field::rationals(), Field::prime(101)}) {
    for (unsigned p : {2u, 3u}) {
      for (int i = 0; i < 30; ++i) {
        const RatFunc h = g.nonzero_ratfunc(k, 3);
        if (k.characteristic() && (h.num().degree() + 1) * static_cast<int>(p) >= 101) continue;
        auto r = pth_power_root(h.pow(p), p);
        REQUIRE(r);
        CHECK(r->pow(p) == h.pow(p));
      }
    }
  }
}

TEST_CASE("palindromic_reduce examples") {
  const Field qq = Field::rationals();
  CHECK(palindromic_reduce(ints(qq, {1, 0, 1})) == ints(qq, {0, 1}));
  CHECK(palindromic_reduce(ints(qq, {1, 0, 0, 0, 1})) == ints(qq, {-2, 0, 1}));
  const FieldElement a = qq.from_int(7);
  CHECK(palindromic_reduce(KPoly(qq, {qq.one(), -a, qq.one()})) == KPoly(qq, {-a, qq.one()}));
  CHECK_THROWS_AS(palindromic_reduce(ints(qq, {1, 2, 3})), Error);
  CHECK_THROWS_AS(palindromic_reduce(ints(qq, {1, 1})), Error);
}

TEST_CASE("palindromic_reduce round trip") {
  Gen g(16);
  const Field k = Field::rationals();
  const RatFunc v = RatFunc::variable(k);
  for (int i = 0; i < 50; ++i) {
    const std::size_t m = static_cast<std::size_t>(g.integer(0, 5));
    std::vector<FieldElement> half;
    for (std::size_t j = 0; j <= m; ++j) half.push_back(g.scalar(k));
    if (half[0].is_zero()) half[0] = k.one();
    std::vector<FieldElement> c(2 * m + 1, k.zero());
    for (std::size_t j = 0; j <= m; ++j) c[j] = c[2 * m - j] = half[j];
    const KPoly s(k, c);
    const KPoly t = palindromic_reduce(s);
    CHECK(t.degree() == static_cast<int>(m));
    const RatFunc back = RatFunc(t).compose(v + v.inverse()) * v.pow(static_cast<long long>(m));
    CHECK(back == RatFunc(s));
  }
}

TEST_CASE("roots_in_k examples") {
  const Field qq = Field::rationals();
  {
    auto r = roots_in_k(ints(qq, {-1, 0, 1}));
    CHECK(r.roots == std::vector<FieldElement>{qq.from_int(-1), qq.one()});
    CHECK(r.remainder.degree() == 0);
  }
  {
    auto r = roots_in_k(ints(qq, {1, 0, 1}));
    CHECK(r.roots.empty());
    CHECK(r.remainder == ints(qq, {1, 0, 1}));
  }
  {
    const Field f5 = Field::prime(5);
    auto r = roots_in_k(ints(f5, {1, 0, 1}));
    CHECK(r.roots == std::vector<FieldElement>{f5.from_int(2), f5.from_int(3)});
    CHECK(r.remainder.degree() == 0);
  }
  {
    const Field c4 = Field::cyclotomic(4);
    auto r = roots_in_k(ints(c4, {1, 0, 1}));
    CHECK(r.roots.size() == 2);
  }
}

TEST_CASE("roots_in_k reconstruction") {
  Gen g(17);
  for (const Field& k : {Field::rationals(), Field::prime(101)}) {
    for (int i = 0; i < 30; ++i) {
      KPoly f = g.nonzero_poly(k, 2);
      std::vector<FieldElement> planted;
      for (int j = 0; j < 3; ++j) {
        planted.push_back(g.scalar(k));
        f *= KPoly(k, {-planted.back(), k.one()});
      }
      const RootSplit s = roots_in_k(f);
      KPoly back = s.remainder;
      for (const auto& r : s.roots) back *= KPoly(k, {-r, k.one()});
      CHECK(back == f);
      for (const auto& p : planted) CHECK(std::find(s.roots.begin(), s.roots.end(), p) != s.roots.end());
      for (const auto& x : (k.tag() == FieldTag::PrimeField ? k.elements() : std::vector<FieldElement>{})) {
        CHECK_FALSE(s.remainder(x).is_zero());
      }
    }
  }
}

TEST_CASE("rewrite_in_invariant examples") {
  const Field qq = Field::rationals();
  const RatFunc t = RatFunc::variable(qq);
  const RatFunc s = RatFunc::variable(qq);
  const RatFunc inv = t * t + (t * t).inverse();
  CHECK(rewrite_in_invariant(inv) == s);
  CHECK(rewrite_in_invariant(t.pow(4) + t.pow(-4)) == s * s - RatFunc::from_int(qq, 2));
  CHECK(rewrite_in_invariant(inv / (inv - RatFunc::one(qq))) == s / (s - RatFunc::one(qq)));
  CHECK_THROWS_AS(rewrite_in_invariant(t), Error);
  CHECK_THROWS_AS(rewrite_in_invariant(t * t), Error);
}

TEST_CASE("rewrite_in_invariant round trip") {
  Gen g(18);
  for (const Field& k : {Field::rationals(), Field::prime(101)}) {
    const RatFunc s = v1_invariant(k);
    for (int i = 0; i < 100; ++i) {
      const RatFunc r = g.nonzero_ratfunc(k, 3);
      const RatFunc delta = r.compose(s);
      const RatFunc q = rewrite_in_invariant(delta);
      CHECK(q.compose(s) == delta);
      CHECK(q == r);
    }
  }
}

TEST_CASE("odd_part") {
  const Field qq = Field::rationals();
  const KPoly x = KPoly::variable(qq);
  CHECK(odd_part(x.pow(3) * ints(qq, {1, 1}).pow(2)) == x);
  CHECK(odd_part(ints(qq, {4})) == ints(qq, {1}));
}
