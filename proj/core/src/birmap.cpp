#include "cremona/birmap.hpp"

namespace cremona {
namespace {

constexpr const char* kModule = "birmap";

KtMoebius substitute(const KtMoebius& m, const KMoebius& g) {
  if (g.is_identity()) return m;
  return KtMoebius(substitute(m.a(), g), substitute(m.b(), g), substitute(m.c(), g), substitute(m.d(), g));
}

}  // namespace

RatFunc substitute(const RatFunc& f, const KMoebius& g) { return act(g.inverse(), f); }

PlaneMap::PlaneMap(KMoebius gamma, KtMoebius m) : gamma_(std::move(gamma)), m_(std::move(m)) {
  if (!(gamma_.field() == m_.field())) fail(ErrorKind::FieldMismatch, kModule, "map parts over different fields");
}

PlaneMap PlaneMap::identity(const Field& k) { return {KMoebius::identity(k), KtMoebius::identity(k)}; }
PlaneMap PlaneMap::base(const KMoebius& gamma) { return {gamma, KtMoebius::identity(gamma.field())}; }
PlaneMap PlaneMap::fiber(const KtMoebius& m) { return {KMoebius::identity(m.field()), m}; }

PlaneMap PlaneMap::diagonal(const FieldElement& a, const FieldElement& b) {
  return {KMoebius::scaling(a), KtMoebius::scaling(RatFunc::constant(b))};
}

PlaneMap PlaneMap::from_semidirect(const SemidirectElt& s) {
  return {s.gamma(), act(s.gamma().inverse(), s.m())};
}

SemidirectElt PlaneMap::to_semidirect() const { return {act(gamma_, m_), gamma_}; }

PlaneMap operator*(const PlaneMap& f, const PlaneMap& g) {
  return {f.gamma_ * g.gamma_, substitute(f.m_, g.gamma_) * g.m_};
}

PlaneMap PlaneMap::inverse() const {
  const KMoebius gi = gamma_.inverse();
  return {gi, substitute(m_, gi).inverse()};
}

PlaneMap PlaneMap::pow(unsigned e) const {
  PlaneMap r = identity(field());
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

PlaneMap PlaneMap::conjugate_by(const PlaneMap& h) const { return h * *this * h.inverse(); }

std::string PlaneMap::to_string() const { return "(" + gamma_.to_string("x") + ", " + m_.to_string("y", "x") + ")"; }

PlaneMap compose(const PlaneMap& f, const PlaneMap& g) { return f * g; }

PlaneMap sigma_f(const RatFunc& f, unsigned p) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, kModule, "sigma_f needs a nonzero function");
  const Field& k = f.field();
  const RatFunc xp = RatFunc::variable(k).pow(p);
  return PlaneMap::fiber(KtMoebius::scaling(f.compose(xp)));
}

bool is_diagonal_shape(const PlaneMap& f) {
  const KMoebius& g = f.gamma();
  const KtMoebius& m = f.m();
  if (!g.b().is_zero() || !g.c().is_zero()) return false;
  if (!m.b().is_zero() || !m.c().is_zero()) return false;
  return m.a().is_constant() && m.d().is_constant();
}

ElementaryGroup closure(const std::vector<PlaneMap>& gens, unsigned p, unsigned max_rank) {
  if (gens.empty()) fail(ErrorKind::InvalidInput, kModule, "empty generator list");
  auto c = elementary_closure(gens, p, max_rank, PlaneMap::identity(gens.front().field()), kModule);
  ElementaryGroup out;
  out.p = p;
  out.rank = static_cast<unsigned>(c.basis.size());
  out.elements = std::move(c.elements);
  out.generators = std::move(c.basis);
  return out;
}

std::string NFData::to_string(const std::string& var) const {
  if (kind == NFKind::Empty) return "empty";
  std::string s = "genus " + std::to_string(genus) + ", branch " + branch.to_string(var);
  if (infinity_branched) s += " and infinity";
  return s;
}

NFData nf_from_discriminant(const RatFunc& delta) {
  if (delta.is_zero()) fail(ErrorKind::InvalidInput, kModule, "zero discriminant");
  // num and den are coprime, so the odd part of num*den splits.
  NFData out{NFKind::Empty, KPoly(delta.field()), false, 0};
  out.branch = odd_part(delta.num()) * odd_part(delta.den());
  out.infinity_branched = out.branch.degree() % 2 == 1;
  const unsigned b = out.branch_points();
  out.genus = b == 0 ? 0 : (b - 1) / 2;
  if (out.genus == 0) return NFData{NFKind::Empty, KPoly::constant(delta.field().one()), false, 0};
  out.kind = NFKind::Hyperelliptic;
  return out;
}

NFData fixed_curve(const PlaneMap& sigma) {
  if (sigma.is_identity()) fail(ErrorKind::NotInvolution, kModule, "the identity has no normalized fixed locus");
  if (!(sigma * sigma).is_identity()) fail(ErrorKind::NotInvolution, kModule, "map is not an involution");
  const Field& k = sigma.field();
  if (!sigma.gamma().is_identity()) return NFData{NFKind::Empty, KPoly::constant(k.one()), false, 0};
  // Fixed points of y -> (ay + b)/(cy + d): c y^2 + (d - a) y - b = 0.
  const KtMoebius& m = sigma.m();
  const RatFunc dma = m.d() - m.a();
  return nf_from_discriminant(dma * dma + RatFunc::from_int(k, 4) * m.b() * m.c());
}

std::vector<std::pair<std::size_t, NFData>> nf_profile(const ElementaryGroup& g) {
  if (g.p != 2) fail(ErrorKind::PreconditionFailed, kModule, "nf_profile needs a 2-group");
  std::vector<std::pair<std::size_t, NFData>> out;
  for (std::size_t i = 1; i < g.elements.size(); ++i) out.emplace_back(i, fixed_curve(g.elements[i]));
  return out;
}

}  // namespace cremona
