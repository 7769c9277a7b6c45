#include "cremona/conjclass.hpp"

#include <algorithm>

namespace cremona {
namespace {

constexpr const char* kModule = "conjclass";

// Homography sending p1 -> 0, p2 -> infinity, p3 -> 1.
KMoebius to_standard(const ProjectivePoint& p1, const ProjectivePoint& p2, const ProjectivePoint& p3) {
  auto det = [](const ProjectivePoint& a, const ProjectivePoint& b) { return a.x() * b.w() - a.w() * b.x(); };
  const FieldElement c1 = det(p3, p2);
  const FieldElement c2 = det(p3, p1);
  return KMoebius(p1.w() * c1, -p1.x() * c1, p2.w() * c2, -p2.x() * c2);
}

ProjectivePoint apply(const KMoebius& g, const ProjectivePoint& p) {
  return ProjectivePoint::homogeneous(g.a() * p.x() + g.b() * p.w(), g.c() * p.x() + g.d() * p.w());
}

bool in_v1(const KMoebius& g) {
  const auto v = v1_elements(g.field());
  return std::find(v.begin(), v.end(), g) != v.end();
}

}  // namespace

IndexSet::IndexSet(const Field& k, std::vector<FieldElement> elements) : field_(k), elements_(std::move(elements)) {
  const FieldElement two = k.from_int(2);
  for (const auto& a : elements_) {
    if (!(a.field() == k)) fail(ErrorKind::FieldMismatch, kModule, "index set element from another field");
    if (a == two || a == -two) fail(ErrorKind::InvalidInput, kModule, "index set may not contain 2 or -2");
  }
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    fail(ErrorKind::InvalidInput, kModule, "index set elements must be distinct");
  }
}

bool operator<(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements_ < b.elements_;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) s += (i ? ", " : "") + elements_[i].to_string();
  return s + "}";
}

KPoly index_polynomial(const IndexSet& i) {
  const Field& k = i.field();
  KPoly r = KPoly::constant(k.one());
  for (const auto& a : i.elements()) r *= KPoly(k, {-a, k.one()});
  return r;
}

RatFunc index_function(const IndexSet& i) {
  const Field& k = i.field();
  const RatFunc s = v1_invariant(k);
  RatFunc r = RatFunc::one(k);
  for (const auto& a : i.elements()) r *= s - RatFunc::constant(a);
  return r;
}

ElementaryGroup vdelta_v1_group(const RatFunc& delta) {
  const Field& k = delta.field();
  const FieldElement m1 = k.from_int(-1);
  const std::vector<PlaneMap> gens{PlaneMap::base(KMoebius::scaling(m1)), PlaneMap::base(KMoebius::inversion(k.one())),
                                   PlaneMap::fiber(KtMoebius::scaling(RatFunc::constant(m1))),
                                   PlaneMap::fiber(KtMoebius::inversion(delta))};
  ElementaryGroup g = closure(gens, 2, 4);
  if (g.elements.size() != 16) fail(ErrorKind::Internal, kModule, "V_delta x V_1 does not have order 16");
  return g;
}

ElementaryGroup build_GI(const IndexSet& i) { return vdelta_v1_group(index_function(i)); }

std::array<KMoebius, 6> s3_elements(const Field& k) {
  if (k.characteristic() == 2) fail(ErrorKind::Unsupported, kModule, "characteristic 2");
  const std::array<ProjectivePoint, 3> pts{ProjectivePoint::finite(k.from_int(2)),
                                           ProjectivePoint::finite(k.from_int(-2)), ProjectivePoint::infinity(k)};
  const KMoebius source = to_standard(pts[0], pts[1], pts[2]);
  std::array<int, 3> perm{0, 1, 2};
  std::vector<KMoebius> out;
  do {
    const KMoebius target = to_standard(pts[perm[0]], pts[perm[1]], pts[perm[2]]);
    out.push_back(target.inverse() * source);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {out[0], out[1], out[2], out[3], out[4], out[5]};
}

ConjClassC1 canonicalize(const IndexSet& i) {
  const Field& k = i.field();
  std::vector<IndexSet> orbit;
  for (const auto& h : s3_elements(k)) {
    std::vector<FieldElement> image;
    for (const auto& a : i.elements()) {
      const ProjectivePoint p = apply(h, ProjectivePoint::finite(a));
      if (p.is_infinity()) fail(ErrorKind::Internal, kModule, "homography of S_3 sent an index to infinity");
      image.push_back(p.value());
    }
    IndexSet img(k, std::move(image));
    if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(std::move(img));
  }
  std::sort(orbit.begin(), orbit.end());
  return {orbit.front(), orbit};
}

bool are_conjugate_c1(const IndexSet& a, const IndexSet& b) {
  return canonicalize(a).canonical == canonicalize(b).canonical;
}

ConjClassC1 recover_I(const ElementaryGroup& g) {
  if (g.p != 2 || g.elements.size() != 16) fail(ErrorKind::PreconditionFailed, kModule, "recover_I needs a group of order 16");
  const Field& k = g.elements.front().field();
  for (const auto& x : g.elements) {
    if (!in_v1(x.gamma())) fail(ErrorKind::PreconditionFailed, kModule, "image on the x-line is not V_1");
  }
  std::vector<NFData> curves;
  for (auto& [index, nf] : nf_profile(g)) {
    if (nf.kind != NFKind::Empty) curves.push_back(std::move(nf));
  }
  if (curves.empty()) return canonicalize(IndexSet(k));
  if (curves.size() != 2) fail(ErrorKind::PreconditionFailed, kModule, "more than two elements have a fixed curve");
  const NFData& nf = curves.front();
  const KPoly& r = nf.branch;
  const std::size_t n = static_cast<std::size_t>(r.degree());
  if (nf.infinity_branched || n % 4 != 0 || !(r.reciprocal(n) == r)) {
    fail(ErrorKind::PreconditionFailed, kModule, "branch locus is not symmetric under V_1");
  }
  std::vector<FieldElement> even;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j % 2 == 1 && !r.coeff(j).is_zero()) fail(ErrorKind::PreconditionFailed, kModule, "branch locus is not symmetric under V_1");
    if (j % 2 == 0) even.push_back(r.coeff(j));
  }
  const KPoly t = palindromic_reduce(KPoly(k, std::move(even)));
  RootSplit split = roots_in_k(t);
  if (split.remainder.degree() > 0) fail(ErrorKind::RequiresFieldExtension, kModule, "the index polynomial does not split over k");
  return canonicalize(IndexSet(k, std::move(split.roots)));
}

ReducedDelta reduce_delta(const RatFunc& delta) {
  const Field& k = delta.field();
  if (delta.is_zero()) fail(ErrorKind::InvalidInput, kModule, "delta must be nonzero");
  const RatFunc q = rewrite_in_invariant(delta);
  // num/den = num*den/den^2 = unit * R * S^2 / den^2.
  const auto sf = yun_squarefree(q.num() * q.den());
  KPoly r = KPoly::constant(k.one());
  KPoly sq = KPoly::constant(k.one());
  for (const auto& f : sf.factors) {
    if (f.multiplicity % 2 == 1) r *= f.factor;
    sq *= f.factor.pow(f.multiplicity / 2);
  }
  const RatFunc t = RatFunc::variable(k);
  const RatFunc s = v1_invariant(k);
  RatFunc mu = RatFunc(sq, q.den()).compose(s);
  // s - 2 = (t - 1/t)^2 and s + 2 = (t + 1/t)^2.
  for (int sign : {-1, 1}) {
    const KPoly lin(k, {k.from_int(2 * sign), k.one()});
    auto [quot, rem] = divmod(r, lin);
    if (rem.is_zero()) {
      r = quot;
      mu *= t + RatFunc::from_int(k, sign) * t.inverse();
    }
  }
  const KPoly qr = r.scaled(sf.unit);
  const RatFunc reduced = RatFunc(qr).compose(s);
  if (!(reduced * mu * mu == delta)) fail(ErrorKind::Internal, kModule, "delta reduction check failed");
  return {reduced, qr, SemidirectElt::fiber(KtMoebius::scaling(mu.inverse()))};
}

C1Classification classify_c1(const std::vector<PlaneMap>& gens) {
  if (gens.empty()) fail(ErrorKind::InvalidInput, kModule, "empty generator list");
  std::vector<SemidirectElt> sd;
  for (const auto& g : gens) sd.push_back(g.to_semidirect());
  const Rank4Normalization norm = normalize_rank4_two(sd);
  ReducedDelta red = reduce_delta(norm.delta);
  ConjClassC1 cls = recover_I(vdelta_v1_group(red.delta));
  return {std::move(cls), red.delta, red.conjugator * norm.conjugator};
}

PlaneMap square_move(const RatFunc& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, kModule, "square move needs a nonzero function");
  return PlaneMap::fiber(KtMoebius::scaling(f.compose(v1_invariant(f.field()))));
}

PlaneMap plus_minus_move(const Field& k, int sign) {
  if (sign != 1 && sign != -1) fail(ErrorKind::InvalidInput, kModule, "sign must be 1 or -1");
  const RatFunc x = RatFunc::variable(k);
  return PlaneMap::fiber(KtMoebius::scaling(x + RatFunc::from_int(k, sign) * x.inverse()));
}

std::vector<KMoebius> v1_normalizer(const Field& k) {
  const FieldElement one = k.one();
  std::vector<KMoebius> gens{KMoebius::scaling(-one), KMoebius::inversion(one), KMoebius(one, one, one, -one)};
  if (auto i = k.primitive_root_of_unity(4)) gens.push_back(KMoebius::scaling(*i));
  std::vector<KMoebius> out{KMoebius::identity(k)};
  for (std::size_t j = 0; j < out.size(); ++j) {
    for (const auto& g : gens) {
      KMoebius h = g * out[j];
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
  }
  return out;
}

}  // namespace cremona
