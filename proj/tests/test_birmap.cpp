#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace cremona;
using testing::Gen;

namespace {

PlaneMap sigma_plus(const RatFunc& p) {
  return PlaneMap::fiber(KtMoebius::inversion(p));
}

std::multiset<std::pair<unsigned, unsigned>> nf_shape(const ElementaryGroup& g) {
  std::multiset<std::pair<unsigned, unsigned>> out;
  for (const auto& [i, nf] : nf_profile(g)) {
    if (nf.kind != NFKind::Empty) out.insert({nf.genus, nf.branch_points()});
  }
  return out;
}

void check_group_axioms(const ElementaryGroup& g) {
  const auto& e = g.elements;
  CHECK(e.front().is_identity());
  for (const auto& a : e) {
    CHECK(a.pow(g.p).is_identity());
    CHECK((a * a.inverse()).is_identity());
    for (const auto& b : e) {
      CHECK(a * b == b * a);
      CHECK(std::find(e.begin(), e.end(), a * b) != e.end());
    }
  }
}

}  // namespace

TEST_CASE("compose examples") {
  const Field qq = Field::rationals();
  const PlaneMap f = PlaneMap::base(KMoebius::scaling(qq.from_int(-1)));
  CHECK((f * f).is_identity());

  const RatFunc x = RatFunc::variable(qq);
  const RatFunc p = x * x + (x * x).inverse();
  const PlaneMap flip = PlaneMap::fiber(KtMoebius::scaling(RatFunc::from_int(qq, -1)));
  CHECK(sigma_plus(p) * flip == PlaneMap::fiber(KtMoebius::inversion(-p)));
  CHECK(compose(sigma_plus(p), flip) == sigma_plus(p) * flip);
}

TEST_CASE("composition is the composite of maps") {
  // Pointwise: (f o g)(x0, y0) = f(g(x0, y0)).
  Gen g(31);
  const Field k = Field::prime(101);
  for (int i = 0; i < 100; ++i) {
    const PlaneMap f = g.plane_map(k, 1), h = g.plane_map(k, 1);
    const FieldElement x0 = g.scalar(k), y0 = g.scalar(k);
    auto apply = [](const PlaneMap& m, const FieldElement& x, const FieldElement& y) {
      const FieldElement xs = m.gamma()(x);
      auto at = [&](const RatFunc& r) { return r(x); };
      const KMoebius fib(at(m.m().a()), at(m.m().b()), at(m.m().c()), at(m.m().d()));
      return std::pair{xs, fib(y)};
    };
    try {
      const auto [x1, y1] = apply(h, x0, y0);
      const auto [x2, y2] = apply(f, x1, y1);
      const auto [x3, y3] = apply(f * h, x0, y0);
      CHECK(x2 == x3);
      CHECK(y2 == y3);
    } catch (const Error&) {
      // The random point hit a pole or an indeterminacy; skip it.
    }
  }
}

TEST_CASE("plane maps form a group") {
  Gen g(32);
  const Field k = Field::prime(101);
  for (int i = 0; i < 100; ++i) {
    const PlaneMap a = g.plane_map(k, 1), b = g.plane_map(k, 1), c = g.plane_map(k, 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
    CHECK(a * PlaneMap::identity(k) == a);
    CHECK(a.conjugate_by(b).conjugate_by(b.inverse()) == a);
  }
}

TEST_CASE("closure examples") {
  const Field qq = Field::rationals();
  const ElementaryGroup g = build_GI(IndexSet(qq, {qq.zero()}));
  CHECK(g.elements.size() == 16);
  CHECK(g.rank == 4);
  check_group_axioms(g);

  const Field c3 = Field::cyclotomic(3);
  const FieldElement w = c3.generator();
  const ElementaryGroup d = closure({PlaneMap::diagonal(w, c3.one()), PlaneMap::diagonal(c3.one(), w)}, 3, 2);
  CHECK(d.elements.size() == 9);
  CHECK(d.rank == 2);
  check_group_axioms(d);
}

TEST_CASE("closure exponent map is a bijection") {
  const Field f = Field::prime(31);
  const FieldElement z = *f.primitive_root_of_unity(5);
  const ElementaryGroup g = closure({PlaneMap::diagonal(z, f.one()), PlaneMap::diagonal(f.one(), z)}, 5, 2);
  REQUIRE(g.elements.size() == 25);
  for (unsigned e0 = 0; e0 < 5; ++e0) {
    for (unsigned e1 = 0; e1 < 5; ++e1) {
      CHECK(g.elements[e0 + 5 * e1] == g.generators[0].pow(e0) * g.generators[1].pow(e1));
    }
  }
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(g.elements[i] == g.elements[j]);
  }
}

TEST_CASE("closure errors") {
  const Field qq = Field::rationals();
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  const PlaneMap neg = PlaneMap::base(KMoebius::scaling(qq.from_int(-1)));
  const PlaneMap cayley = PlaneMap::base(KMoebius(qq.one(), qq.one(), qq.one(), qq.from_int(-1)));
  const PlaneMap shift = PlaneMap::base(KMoebius::translation(qq.one()));
  const PlaneMap flip = PlaneMap::fiber(KtMoebius::scaling(RatFunc::from_int(qq, -1)));
  CHECK(kind_of([&] { closure({neg, cayley}, 2, 4); }) == ErrorKind::NonCommuting);
  CHECK(kind_of([&] { closure({neg, shift}, 2, 4); }) == ErrorKind::WrongOrder);
  CHECK(kind_of([&] { closure({neg, flip}, 2, 1); }) == ErrorKind::ClosureExceeded);
  CHECK(closure({neg, flip, neg * flip}, 2, 4).rank == 2);
}

TEST_CASE("fixed_curve examples") {
  const Field qq = Field::rationals();
  const RatFunc x = RatFunc::variable(qq);
  CHECK(fixed_curve(PlaneMap::fiber(KtMoebius::scaling(RatFunc::from_int(qq, -1)))).kind == NFKind::Empty);
  CHECK(fixed_curve(PlaneMap::base(KMoebius::scaling(qq.from_int(-1)))).kind == NFKind::Empty);

  const FieldElement a = qq.from_int(5);
  const NFData nf = fixed_curve(sigma_plus(index_function(IndexSet(qq, {a}))));
  CHECK(nf.kind == NFKind::Hyperelliptic);
  CHECK(nf.genus == 1);
  CHECK(nf.branch == KPoly(qq, {qq.one(), qq.zero(), -a, qq.zero(), qq.one()}));
  CHECK_FALSE(nf.infinity_branched);

  Gen g(33);
  for (std::size_t m = 1; m <= 4; ++m) {
    const NFData c = fixed_curve(sigma_plus(index_function(g.index_set(qq, m))));
    CHECK(c.genus == 2 * m - 1);
    CHECK(c.branch.degree() == static_cast<int>(4 * m));
  }

  CHECK_THROWS_AS(fixed_curve(PlaneMap::identity(qq)), Error);
  try {
    fixed_curve(PlaneMap::fiber(KtMoebius::scaling(RatFunc::from_int(qq, 2))));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvolution);
  }
}

TEST_CASE("genus of y^2 = delta") {
  Gen g(34);
  const Field k = Field::prime(101);
  for (int i = 0; i < 100; ++i) {
    const KPoly d = odd_part(g.nonzero_poly(k, 9));
    const int n = d.degree();
    const NFData nf = nf_from_discriminant(RatFunc(d));
    if (n <= 2) {
      CHECK(nf.kind == NFKind::Empty);
    } else {
      CHECK(nf.genus == static_cast<unsigned>((n - 1) / 2));
      CHECK(nf.infinity_branched == (n % 2 == 1));
    }
  }
}

TEST_CASE("nf_profile examples") {
  const Field qq = Field::rationals();
  {
    const auto prof = nf_profile(build_GI(IndexSet(qq, {qq.zero()})));
    CHECK(prof.size() == 15);
    const auto n = std::count_if(prof.begin(), prof.end(), [](const auto& e) { return e.second.kind != NFKind::Empty; });
    CHECK(n == 2);
    for (const auto& [i, nf] : prof) {
      if (nf.kind != NFKind::Empty) CHECK(nf.genus == 1);
    }
  }
  for (const auto& [i, nf] : nf_profile(build_GI(IndexSet(qq)))) CHECK(nf.kind == NFKind::Empty);
  const Field c3 = Field::cyclotomic(3);
  const ElementaryGroup odd = closure({PlaneMap::diagonal(c3.generator(), c3.one())}, 3, 1);
  CHECK_THROWS_AS(nf_profile(odd), Error);
}

TEST_CASE("nf_profile is a conjugacy invariant") {
  Gen g(35);
  const Field k = Field::prime(101);
  for (int i = 0; i < 10; ++i) {
    const ElementaryGroup gi = build_GI(g.index_set(k, 1 + g.index(2)));
    const PlaneMap h = g.plane_map(k, 1);
    std::vector<PlaneMap> gens;
    for (const auto& x : gi.generators) gens.push_back(x.conjugate_by(h));
    const ElementaryGroup conj = closure(gens, 2, 4);
    check_group_axioms(conj);
    CHECK(nf_shape(conj) == nf_shape(gi));
  }
}

TEST_CASE("sigma_f centralizes the diagonal torsion") {
  const Field k = Field::prime(31);
  const RatFunc t = RatFunc::variable(k);
  const RatFunc one = RatFunc::one(k);
  for (unsigned p : {2u, 3u, 5u}) {
    const FieldElement z = *k.primitive_root_of_unity(p);
    for (const RatFunc& f : {t, t + one, t * t + one}) {
      const PlaneMap s = sigma_f(f, p);
      for (const PlaneMap& d : {PlaneMap::diagonal(z, k.one()), PlaneMap::diagonal(k.one(), z)}) {
        CHECK(s * d == d * s);
      }
      const PlaneMap generic = PlaneMap::diagonal(k.from_int(3), k.from_int(5));
      CHECK(is_diagonal_shape(generic));
      // Monomial f only rescales y.
      CHECK(is_diagonal_shape(generic.conjugate_by(s)) == (f == t));
    }
  }
  CHECK_THROWS_AS(sigma_f(RatFunc::zero(k), 2), Error);
}

TEST_CASE("plane map printing") {
  const Field qq = Field::rationals();
  CHECK(PlaneMap::base(KMoebius::scaling(qq.from_int(-1))).to_string() == "(-x, y)");
  CHECK(sigma_plus(index_function(IndexSet(qq, {qq.zero()}))).to_string() == "(x, ((x^4 + 1)/x^2)/y)");
}
