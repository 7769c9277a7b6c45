#include "doctest.h"
#include "support.hpp"

using namespace cremona;
using testing::Gen;
using testing::same_set;

namespace {

std::vector<SemidirectElt> conjugate_all(const std::vector<SemidirectElt>& g, const SemidirectElt& c) {
  std::vector<SemidirectElt> out;
  for (const auto& x : g) out.push_back(x.conjugate_by(c));
  return out;
}

SemidirectElt random_semidirect(Gen& g, const Field& k, int degree) {
  return SemidirectElt(g.kt_moebius(k, degree), g.moebius(k));
}

bool is_square_class(const RatFunc& a, const RatFunc& b) { return pth_power_root(a / b, 2).has_value(); }

}  // namespace

TEST_CASE("projective_order") {
  const Field qq = Field::rationals();
  CHECK(projective_order(KMoebius::scaling(qq.from_int(-1)), 10) == 2u);
  const Field c3 = Field::cyclotomic(3);
  CHECK(projective_order(KMoebius::scaling(c3.generator()), 10) == 3u);
  CHECK_FALSE(projective_order(KMoebius::translation(qq.one()), 10));
  CHECK(projective_order(KMoebius::identity(qq), 1) == 1u);
  CHECK_THROWS_AS(projective_order(KMoebius::identity(qq), 0), Error);
}

TEST_CASE("normalized representatives") {
  const Field qq = Field::rationals();
  const KMoebius a(qq.from_int(2), qq.from_int(4), qq.from_int(6), qq.from_int(2));
  CHECK(a.a() == qq.one());
  CHECK(a == KMoebius(qq.one(), qq.from_int(2), qq.from_int(3), qq.one()));
  CHECK_THROWS_AS(KMoebius(qq.one(), qq.one(), qq.one(), qq.one()), Error);
}

TEST_CASE("conjugate_to_Cp examples") {
  const Field c3 = Field::cyclotomic(3);
  const FieldElement w = c3.generator();
  const auto d = conjugate_to_Cp(KMoebius::scaling(w), 3);
  CHECK(d.g.is_identity());
  CHECK(d.exponent == 1);

  // Over Q(w)(t): conjugate of the diagonal element.
  Gen g(21);
  const KtMoebius a = KtMoebius::scaling(RatFunc::constant(w));
  for (int i = 0; i < 10; ++i) {
    const KtMoebius h = g.kt_moebius(c3, 1);
    const KtMoebius b = a.conjugate_by(h);
    const auto r = conjugate_to_Cp(b, 3);
    const KtMoebius diag = b.conjugate_by(r.g);
    CHECK(diag == KtMoebius::scaling(RatFunc::constant(w.pow(r.exponent))));
  }

  // Without a cube root of unity the diagonal form is out of reach.
  const Field qq = Field::rationals();
  const KMoebius order3(qq.zero(), qq.from_int(-1), qq.one(), qq.from_int(-1));
  REQUIRE(projective_order(order3, 5) == 3u);
  try {
    conjugate_to_Cp(order3, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RequiresFieldExtension);
  }
}

TEST_CASE("A^3 scalar forces a cube scalar") {
  // tr(A)^2 = det(A) gives A^3 = -tr(A)^3, always a cube in K.
  const Field c3 = Field::cyclotomic(3);
  const RatFunc t = RatFunc::variable(c3);
  const KtMoebius a(t, -t * t, RatFunc::one(c3), RatFunc::zero(c3));
  const Mat2<RatFunc> cube = a.matrix().pow(3);
  REQUIRE(cube.scalar());
  CHECK(pth_power_root(*cube.scalar(), 3).has_value());
  const auto r = conjugate_to_Cp(a, 3);
  CHECK(a.conjugate_by(r.g).b().is_zero());
  CHECK(a.conjugate_by(r.g).c().is_zero());
}

TEST_CASE("conjugate_to_inversion") {
  const Field qq = Field::rationals();
  const RatFunc t = RatFunc::variable(qq);
  {
    const auto r = conjugate_to_inversion(KtMoebius::inversion(t));
    CHECK(r.g.is_identity());
    CHECK(r.delta == t);
  }
  {
    const KtMoebius a = KtMoebius::scaling(RatFunc::from_int(qq, -1));
    const auto r = conjugate_to_inversion(a);
    CHECK(a.conjugate_by(r.g) == KtMoebius::inversion(r.delta));
  }
  Gen g(22);
  for (int i = 0; i < 20; ++i) {
    const RatFunc d0 = g.nonzero_ratfunc(qq, 2);
    const KtMoebius h = g.kt_moebius(qq, 1);
    const KtMoebius a = KtMoebius::inversion(d0).conjugate_by(h);
    const auto r = conjugate_to_inversion(a);
    CHECK(a.conjugate_by(r.g) == KtMoebius::inversion(r.delta));
    CHECK(is_square_class(r.delta, d0));
  }
  CHECK_THROWS_AS(conjugate_to_inversion(KtMoebius::identity(qq)), Error);
}

TEST_CASE("klein_to_Vdelta") {
  const Field qq = Field::rationals();
  const RatFunc t = RatFunc::variable(qq);
  auto vdelta = [&](const RatFunc& d) {
    return std::vector<KtMoebius>{KtMoebius::identity(qq), KtMoebius::scaling(RatFunc::from_int(qq, -1)),
                                  KtMoebius::inversion(d), KtMoebius::inversion(-d)};
  };
  {
    const auto r = klein_to_Vdelta(vdelta(t));
    CHECK(r.g.is_identity());
    CHECK(r.delta == t);
  }
  {
    const auto r = klein_to_Vdelta(vdelta(RatFunc::one(qq)));
    CHECK(is_square_class(r.delta, RatFunc::one(qq)));
  }
  Gen g(23);
  for (int i = 0; i < 20; ++i) {
    const KtMoebius h = g.kt_moebius(qq, 1);
    std::vector<KtMoebius> conj;
    for (const auto& x : vdelta(t)) conj.push_back(x.conjugate_by(h));
    const auto r = klein_to_Vdelta(conj);
    std::vector<KtMoebius> back;
    for (const auto& x : conj) back.push_back(x.conjugate_by(r.g));
    CHECK(same_set(back, vdelta(r.delta)));
    CHECK(is_square_class(r.delta, t));
  }
  std::vector<KtMoebius> bad = vdelta(t);
  bad[3] = KtMoebius::translation(t);
  CHECK_THROWS_AS(klein_to_Vdelta(bad), Error);
}

TEST_CASE("Klein group without a diagonalizable element") {
  // Squares t, 1 - t and t^2 - t: no element has a square class over Q(t).
  const Field qq = Field::rationals();
  const RatFunc t = RatFunc::variable(qq);
  const RatFunc one = RatFunc::one(qq);
  const KtMoebius a = KtMoebius::inversion(t);
  const KtMoebius b(one, -t, one, -one);
  REQUIRE(a * b == b * a);
  try {
    klein_to_Vdelta(std::vector<KtMoebius>{KtMoebius::identity(qq), a, b, a * b});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RequiresFieldExtension);
  }
}

TEST_CASE("hilbert90_cyclic") {
  const Field qq = Field::rationals();
  const RatFunc t = RatFunc::variable(qq);
  const KMoebius inv(qq.zero(), qq.one(), qq.one(), qq.zero());
  CHECK(hilbert90_cyclic(RatFunc::one(qq), inv, 2) == RatFunc::one(qq));
  {
    const RatFunc lambda = act(inv, t) / t;
    const RatFunc mu = hilbert90_cyclic(lambda, inv, 2);
    CHECK(lambda * mu == act(inv, mu));
  }
  Gen g(24);
  const KMoebius neg = KMoebius::scaling(qq.from_int(-1));
  for (int i = 0; i < 50; ++i) {
    const KMoebius sigma = g.coin() ? inv : neg;
    const RatFunc mu0 = g.nonzero_ratfunc(qq, 3);
    const RatFunc lambda = mu0.inverse() * act(sigma, mu0);
    const RatFunc mu = hilbert90_cyclic(lambda, sigma, 2);
    CHECK(lambda == mu.inverse() * act(sigma, mu));
  }
  const Field f31 = Field::prime(31);
  const KMoebius rot = KMoebius::scaling(*f31.primitive_root_of_unity(3));
  for (int i = 0; i < 20; ++i) {
    const RatFunc mu0 = g.nonzero_ratfunc(f31, 3);
    const RatFunc lambda = mu0.inverse() * act(rot, mu0);
    const RatFunc mu = hilbert90_cyclic(lambda, rot, 3);
    CHECK(lambda == mu.inverse() * act(rot, mu));
  }
  CHECK_THROWS_AS(hilbert90_cyclic(t, neg, 2), Error);
}

TEST_CASE("trivialize_cocycle_V1") {
  const Field qq = Field::rationals();
  const auto v1 = v1_elements(qq);
  {
    CocycleV1 c{{RatFunc::one(qq), RatFunc::one(qq), RatFunc::one(qq), RatFunc::one(qq)}};
    CHECK(trivialize_cocycle_V1(c) == RatFunc::one(qq));
  }
  Gen g(25);
  for (int i = 0; i < 30; ++i) {
    const RatFunc mu0 = g.nonzero_ratfunc(qq, 3);
    CocycleV1 c{{mu0, mu0, mu0, mu0}};
    for (std::size_t j = 0; j < 4; ++j) c.values[j] = mu0.inverse() * act(v1[j], mu0);
    check_cocycle(c);
    const RatFunc mu = trivialize_cocycle_V1(c);
    for (std::size_t j = 0; j < 4; ++j) CHECK(c.values[j] == mu.inverse() * act(v1[j], mu));
  }
  const RatFunc t = RatFunc::variable(qq);
  CocycleV1 broken{{RatFunc::one(qq), t, RatFunc::one(qq), RatFunc::one(qq)}};
  CHECK_THROWS_AS(check_cocycle(broken), Error);
  CHECK_THROWS_AS(trivialize_cocycle_V1(broken), Error);
}

TEST_CASE("semidirect product is a group") {
  Gen g(26);
  const Field k = Field::prime(101);
  for (int i = 0; i < 500; ++i) {
    const SemidirectElt a = random_semidirect(g, k, 1), b = random_semidirect(g, k, 1), c = random_semidirect(g, k, 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
  }
}

TEST_CASE("semidirect model matches plane map composition") {
  Gen g(27);
  const Field k = Field::prime(101);
  for (int i = 0; i < 200; ++i) {
    const PlaneMap f = g.plane_map(k, 1), h = g.plane_map(k, 1);
    CHECK((f * h).to_semidirect() == f.to_semidirect() * h.to_semidirect());
    CHECK(PlaneMap::from_semidirect(f.to_semidirect()) == f);
  }
}

TEST_CASE("normalize_rank2_odd") {
  const Field c3 = Field::cyclotomic(3);
  const auto target = cp_times_cp(c3, 3);
  CHECK(target.size() == 9);
  CHECK(normalize_rank2_odd({target[1], target[3]}, 3).is_identity());

  // Conjugating by z -> z f(t^3) keeps C_3 x C_3.
  const RatFunc t = RatFunc::variable(c3);
  const SemidirectElt sf = SemidirectElt::fiber(KtMoebius::scaling(t.pow(3) + RatFunc::one(c3)));
  const auto moved = conjugate_all(target, sf);
  CHECK(same_group(moved, target));
  const SemidirectElt c = normalize_rank2_odd(moved, 3);
  CHECK(same_group(conjugate_all(moved, c), target));

  Gen g(28);
  const Field f31 = Field::prime(31);
  const auto t31 = cp_times_cp(f31, 3);
  for (int i = 0; i < 5; ++i) {
    const SemidirectElt h = random_semidirect(g, f31, 1);
    const auto conj = conjugate_all(t31, h);
    const SemidirectElt n = normalize_rank2_odd({conj[1], conj[3]}, 3);
    const auto back = conjugate_all(conj, n);
    CHECK(same_group(back, t31));
    for (const auto& x : back) CHECK((x.pow(3)).is_identity());
  }
  CHECK_THROWS_AS(normalize_rank2_odd({t31[1]}, 3), Error);
}

TEST_CASE("normalize_rank4_two") {
  const Field qq = Field::rationals();
  const RatFunc s = v1_invariant(qq);
  const auto target = vdelta_times_v1(s);
  CHECK(target.size() == 16);
  {
    const Rank4Normalization r = normalize_rank4_two(target);
    CHECK(same_group(conjugate_all(target, r.conjugator), vdelta_times_v1(r.delta)));
    CHECK(r.delta == s);
  }
  Gen g(29);
  const Field f = Field::prime(101);
  const RatFunc sf = v1_invariant(f);
  const auto tf = vdelta_times_v1(sf);
  for (int i = 0; i < 3; ++i) {
    const SemidirectElt h = random_semidirect(g, f, 1);
    const auto conj = conjugate_all(tf, h);
    const Rank4Normalization r = normalize_rank4_two(conj);
    const auto back = conjugate_all(conj, r.conjugator);
    CHECK(same_group(back, vdelta_times_v1(r.delta)));
    CHECK(rewrite_in_invariant(r.delta).num().degree() >= 0);
    for (const auto& x : back) CHECK((x * x).is_identity());
  }
}
