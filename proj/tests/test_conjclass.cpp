#include <algorithm>
#include <optional>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace cremona;
using testing::Gen;

namespace {

// Oracle over plain rationals: the six homographies permuting {2, -2, oo},
// written out by hand; nullopt stands for infinity.
using Q = std::optional<mpq_class>;

Q apply_oracle(int which, const Q& u) {
  const mpq_class two(2), twelve(12);
  auto frac = [](const mpq_class& n, const mpq_class& d) -> Q {
    if (d == 0) return std::nullopt;
    return mpq_class(n / d);
  };
  if (!u) {
    switch (which) {
      case 0: case 2: return std::nullopt;
      case 1: case 4: return mpq_class(-2);
      default: return mpq_class(2);
    }
  }
  const mpq_class& x = *u;
  switch (which) {
    case 0: return x;
    case 1: return frac(-2 * x + twelve, x + two);
    case 2: return mpq_class(-x);
    case 3: return frac(2 * x - twelve, x + two);
    case 4: return frac(-2 * x - twelve, x - two);
    default: return frac(2 * x + twelve, x - two);
  }
}

std::vector<mpq_class> oracle_canonical(std::vector<mpq_class> in) {
  std::vector<std::vector<mpq_class>> images;
  for (int h = 0; h < 6; ++h) {
    std::vector<mpq_class> img;
    for (const auto& a : in) img.push_back(*apply_oracle(h, a));
    std::sort(img.begin(), img.end());
    images.push_back(img);
  }
  return *std::min_element(images.begin(), images.end());
}

std::vector<mpq_class> rationals_of(const IndexSet& s) {
  std::vector<mpq_class> out;
  for (const auto& e : s.elements()) out.push_back(*e.to_rational());
  return out;
}

ProjectivePoint image(const KMoebius& h, const ProjectivePoint& p) {
  const FieldElement x = p.x(), w = p.w();
  return ProjectivePoint::homogeneous(h.a() * x + h.b() * w, h.c() * x + h.d() * w);
}

ElementaryGroup conjugated(const ElementaryGroup& g, const PlaneMap& h) {
  std::vector<PlaneMap> gens;
  for (const auto& x : g.generators) gens.push_back(x.conjugate_by(h));
  return closure(gens, 2, 4);
}

}  // namespace

TEST_CASE("IndexSet validation") {
  const Field qq = Field::rationals();
  const IndexSet s(qq, {qq.from_int(3), qq.from_int(-1), qq.zero()});
  CHECK(s.to_string() == "{-1, 0, 3}");
  CHECK(IndexSet(qq).to_string() == "{}");
  CHECK_THROWS_AS(IndexSet(qq, {qq.from_int(2)}), Error);
  CHECK_THROWS_AS(IndexSet(qq, {qq.from_int(-2)}), Error);
  CHECK_THROWS_AS(IndexSet(qq, {qq.one(), qq.one()}), Error);
  CHECK_THROWS_AS(IndexSet(qq, {Field::prime(7).one()}), Error);
  CHECK(IndexSet(qq, {qq.from_int(5)}) < IndexSet(qq, {qq.zero(), qq.one()}));
}

TEST_CASE("index polynomial and function") {
  const Field qq = Field::rationals();
  const IndexSet s(qq, {qq.zero(), qq.one()});
  CHECK(index_polynomial(s) == KPoly::from_ints(qq, {0, -1, 1}));
  const RatFunc u = v1_invariant(qq);
  CHECK(index_function(s) == u * (u - RatFunc::one(qq)));
  CHECK(index_function(IndexSet(qq)) == RatFunc::one(qq));
}

TEST_CASE("build_GI examples") {
  const Field qq = Field::rationals();
  auto nonempty = [](const ElementaryGroup& g) {
    std::vector<unsigned> genera;
    for (const auto& [i, nf] : nf_profile(g)) {
      if (nf.kind != NFKind::Empty) genera.push_back(nf.genus);
    }
    return genera;
  };
  CHECK(build_GI(IndexSet(qq)).elements.size() == 16);
  CHECK(nonempty(build_GI(IndexSet(qq))).empty());
  CHECK(nonempty(build_GI(IndexSet(qq, {qq.zero()}))) == std::vector<unsigned>{1, 1});
  CHECK(nonempty(build_GI(IndexSet(qq, {qq.zero(), qq.one()}))) == std::vector<unsigned>{3, 3});
}

TEST_CASE("s3_elements against the hand-written oracle") {
  const Field qq = Field::rationals();
  const auto s3 = s3_elements(qq);
  const ProjectivePoint pts[] = {ProjectivePoint::finite(qq.from_int(2)), ProjectivePoint::finite(qq.from_int(-2)),
                                 ProjectivePoint::infinity(qq)};
  CHECK(s3[0].is_identity());
  CHECK(s3[2] == KMoebius::scaling(qq.from_int(-1)));
  CHECK(s3[3] == KMoebius(qq.from_int(2), qq.from_int(-12), qq.one(), qq.from_int(2)));
  for (int h = 0; h < 6; ++h) {
    for (const auto& p : pts) {
      const ProjectivePoint got = image(s3[static_cast<std::size_t>(h)], p);
      const Q want = apply_oracle(h, p.is_infinity() ? Q{} : Q{*p.value().to_rational()});
      if (!want) {
        CHECK(got.is_infinity());
      } else {
        REQUIRE_FALSE(got.is_infinity());
        CHECK(*got.value().to_rational() == *want);
      }
    }
    for (int v = -5; v <= 5; ++v) {
      if (v == 2 || v == -2) continue;
      const Q want = apply_oracle(h, mpq_class(v));
      CHECK(*s3[static_cast<std::size_t>(h)](qq.from_int(v)).to_rational() == *want);
    }
  }
  // Closed under composition.
  for (const auto& a : s3) {
    for (const auto& b : s3) CHECK(std::find(s3.begin(), s3.end(), a * b) != s3.end());
  }
}

TEST_CASE("canonicalize examples") {
  const Field qq = Field::rationals();
  CHECK(canonicalize(IndexSet(qq)).canonical.empty());
  const ConjClassC1 c = canonicalize(IndexSet(qq, {qq.zero()}));
  CHECK(c.canonical == IndexSet(qq, {qq.from_int(-6)}));
  CHECK(c.orbit.size() == 3);
  CHECK(oracle_canonical({mpq_class(0)}) == std::vector<mpq_class>{mpq_class(-6)});
}

TEST_CASE("canonicalize matches the oracle and is S3-invariant") {
  Gen g(41);
  const Field qq = Field::rationals();
  const auto s3 = s3_elements(qq);
  for (int i = 0; i < 200; ++i) {
    const IndexSet s = g.index_set(qq, g.index(4));
    const ConjClassC1 c = canonicalize(s);
    CHECK(rationals_of(c.canonical) == oracle_canonical(rationals_of(s)));
    CHECK(6 % c.orbit.size() == 0);
    const auto& h = s3[g.index(6)];
    std::vector<FieldElement> moved;
    for (const auto& a : s.elements()) moved.push_back(h(a));
    CHECK(canonicalize(IndexSet(qq, moved)).canonical == c.canonical);
  }
}

TEST_CASE("are_conjugate_c1") {
  const Field qq = Field::rationals();
  const IndexSet zero(qq, {qq.zero()});
  CHECK(are_conjugate_c1(zero, IndexSet(qq, {qq.from_int(-6)})));
  CHECK_FALSE(are_conjugate_c1(zero, IndexSet(qq, {qq.one()})));
  CHECK(are_conjugate_c1(zero, zero));
  CHECK_FALSE(are_conjugate_c1(zero, IndexSet(qq)));
}

TEST_CASE("recover_I round trip") {
  Gen g(42);
  const Field f = Field::prime(101);
  for (int i = 0; i < 50; ++i) {
    const IndexSet s = g.index_set(f, g.index(4));
    CHECK(recover_I(build_GI(s)).canonical == canonicalize(s).canonical);
  }
  const Field qq = Field::rationals();
  for (int i = 0; i < 10; ++i) {
    const IndexSet s = g.index_set(qq, 1 + g.index(3));
    CHECK(recover_I(build_GI(s)).canonical == canonicalize(s).canonical);
  }
  CHECK(recover_I(build_GI(IndexSet(qq))).canonical.empty());
}

TEST_CASE("recover_I errors") {
  const Field qq = Field::rationals();
  const RatFunc s = v1_invariant(qq);
  try {
    recover_I(vdelta_v1_group(s * s - RatFunc::from_int(qq, 3)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RequiresFieldExtension);
  }
  const ElementaryGroup small = closure({PlaneMap::base(KMoebius::scaling(qq.from_int(-1)))}, 2, 4);
  CHECK_THROWS_AS(recover_I(small), Error);
}

TEST_CASE("reduce_delta") {
  const Field qq = Field::rationals();
  const RatFunc s = v1_invariant(qq);
  const RatFunc one = RatFunc::one(qq);
  const RatFunc p = s * (s - one);
  const RatFunc f = s + RatFunc::from_int(qq, 3);
  const RatFunc delta = p * f * f * (s + RatFunc::from_int(qq, 2)) / (s - RatFunc::from_int(qq, 2));
  const ReducedDelta r = reduce_delta(delta);
  CHECK(r.delta == p);
  CHECK(r.q == KPoly::from_ints(qq, {0, -1, 1}));
  CHECK(same_group(
      [&] {
        std::vector<SemidirectElt> out;
        for (const auto& x : vdelta_times_v1(delta)) out.push_back(x.conjugate_by(r.conjugator));
        return out;
      }(),
      vdelta_times_v1(r.delta)));
}

TEST_CASE("moves preserve the recovered index set") {
  Gen g(43);
  const Field qq = Field::rationals();
  const RatFunc x = RatFunc::variable(qq);
  const auto norm = v1_normalizer(qq);
  CHECK(norm.size() >= 8);
  for (const auto& n : norm) {
    for (const auto& v : v1_elements(qq)) {
      const KMoebius c = v.conjugate_by(n);
      CHECK(std::find(v1_elements(qq).begin(), v1_elements(qq).end(), c) != v1_elements(qq).end());
    }
  }
  for (int i = 0; i < 5; ++i) {
    const IndexSet s = g.index_set(qq, 1 + g.index(2));
    const ElementaryGroup gi = build_GI(s);
    const PlaneMap h = square_move(x + RatFunc::from_int(qq, g.integer(-3, 3))) *
                       plus_minus_move(qq, g.coin() ? 1 : -1) * PlaneMap::base(norm[g.index(norm.size())]);
    CHECK(recover_I(conjugated(gi, h)).canonical == canonicalize(s).canonical);
  }
}

TEST_CASE("classify_c1 from random conjugates") {
  Gen g(44);
  const Field f = Field::prime(101);
  for (int i = 0; i < 3; ++i) {
    const IndexSet s = g.index_set(f, 1 + g.index(2));
    const ElementaryGroup gi = build_GI(s);
    const PlaneMap h = g.plane_map(f, 1);
    std::vector<PlaneMap> gens;
    for (const auto& x : gi.generators) gens.push_back(x.conjugate_by(h));
    const C1Classification c = classify_c1(gens);
    CHECK(c.cls.canonical == canonicalize(s).canonical);
  }
}
