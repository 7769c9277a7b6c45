#include <algorithm>

#include "cremona/semidirect.hpp"

namespace cremona {
namespace {

constexpr const char* kModule = "moebius";

int degree_of(const RatFunc& f) { return std::max(f.num().degree(), f.den().degree()); }

std::vector<SemidirectElt> fiber_part(const std::vector<SemidirectElt>& g) {
  std::vector<SemidirectElt> out;
  for (const auto& x : g) {
    if (x.in_fiber_group()) out.push_back(x);
  }
  return out;
}

std::vector<KMoebius> image(const std::vector<SemidirectElt>& g) {
  std::vector<KMoebius> out;
  for (const auto& x : g) {
    if (std::find(out.begin(), out.end(), x.gamma()) == out.end()) out.push_back(x.gamma());
  }
  return out;
}

const SemidirectElt& lift_of(const std::vector<SemidirectElt>& g, const KMoebius& gamma) {
  for (const auto& x : g) {
    if (x.gamma() == gamma) return x;
  }
  fail(ErrorKind::Internal, kModule, "no element of the group lies over " + gamma.to_string("t"));
}

// Norm-one element lambda = mu^-1 sigma(mu) by the character sum over
// candidates c = t^(step*k).
RatFunc h90(const RatFunc& lambda, const KMoebius& sigma, unsigned p, unsigned step) {
  const Field& k = lambda.field();
  if (lambda.is_zero()) fail(ErrorKind::InvalidInput, kModule, "cocycle value must be nonzero");
  RatFunc norm = RatFunc::one(k);
  RatFunc conj = lambda;
  std::vector<RatFunc> partial{RatFunc::one(k)};  // prod_{j<i} sigma^j(lambda)
  for (unsigned i = 0; i < p; ++i) {
    norm *= conj;
    if (i + 1 < p) partial.push_back(norm);
    conj = act(sigma, conj);
  }
  if (!norm.is_one()) fail(ErrorKind::PreconditionFailed, kModule, "norm of lambda is not 1");
  unsigned bound = 4 * static_cast<unsigned>(degree_of(lambda)) + 4;
  const unsigned ceiling = 16 * bound;
  const RatFunc t = RatFunc::variable(k);
  for (unsigned e = 0; e <= bound; ++e) {
    if (e == bound && bound < ceiling) bound *= 2;
    RatFunc c = t.pow(static_cast<long long>(step * e));
    RatFunc sum = RatFunc::zero(k);
    for (unsigned i = 0; i < p; ++i) {
      sum += partial[i] * c;
      c = act(sigma, c);
    }
    if (sum.is_zero()) continue;
    RatFunc mu = sum.inverse();
    mu = mu / RatFunc::constant(mu.num().leading());
    if (!(mu * lambda == act(sigma, mu))) fail(ErrorKind::Internal, kModule, "Hilbert 90 check failed");
    return mu;
  }
  fail(ErrorKind::Internal, kModule, "Hilbert 90 candidate bound exhausted");
}

std::size_t v1_index(const std::array<KMoebius, 4>& v, const KMoebius& g) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (v[i] == g) return i;
  }
  fail(ErrorKind::Internal, kModule, "element outside V_1");
}

// lambda with M = z -> lambda z (diagonal).
RatFunc diagonal_factor(const KtMoebius& m) {
  if (!m.b().is_zero() || !m.c().is_zero()) fail(ErrorKind::PreconditionFailed, kModule, "lift is not a homothety");
  return m.a() / m.d();
}

}  // namespace

RatFunc act(const KMoebius& gamma, const RatFunc& f) {
  if (gamma.is_identity() || f.is_constant()) return f;
  const KMoebius inv = gamma.inverse();
  const Field& k = f.field();
  const RatFunc t = RatFunc::variable(k);
  const RatFunc sub = (RatFunc::constant(inv.a()) * t + RatFunc::constant(inv.b())) /
                      (RatFunc::constant(inv.c()) * t + RatFunc::constant(inv.d()));
  return f.compose(sub);
}

KtMoebius act(const KMoebius& gamma, const KtMoebius& m) {
  if (gamma.is_identity()) return m;
  return KtMoebius(act(gamma, m.a()), act(gamma, m.b()), act(gamma, m.c()), act(gamma, m.d()));
}

SemidirectElt::SemidirectElt(KtMoebius m, KMoebius gamma) : m_(std::move(m)), gamma_(std::move(gamma)) {
  if (!(m_.field() == gamma_.field())) fail(ErrorKind::FieldMismatch, kModule, "semidirect parts over different fields");
}

SemidirectElt SemidirectElt::identity(const Field& k) { return {KtMoebius::identity(k), KMoebius::identity(k)}; }
SemidirectElt SemidirectElt::fiber(const KtMoebius& m) { return {m, KMoebius::identity(m.field())}; }
SemidirectElt SemidirectElt::base(const KMoebius& gamma) { return {KtMoebius::identity(gamma.field()), gamma}; }

SemidirectElt operator*(const SemidirectElt& x, const SemidirectElt& y) {
  return {x.m_ * act(x.gamma_, y.m_), x.gamma_ * y.gamma_};
}

SemidirectElt SemidirectElt::inverse() const {
  const KMoebius gi = gamma_.inverse();
  return {act(gi, m_.inverse()), gi};
}

SemidirectElt SemidirectElt::pow(unsigned e) const {
  SemidirectElt r = identity(field());
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

SemidirectElt SemidirectElt::conjugate_by(const SemidirectElt& c) const { return c * *this * c.inverse(); }

std::string SemidirectElt::to_string() const {
  return "(" + m_.to_string("z", "t") + ", " + gamma_.to_string("t") + ")";
}

std::array<KMoebius, 4> v1_elements(const Field& k) {
  return {KMoebius::identity(k), KMoebius::scaling(k.from_int(-1)), KMoebius::inversion(k.one()),
          KMoebius::inversion(k.from_int(-1))};
}

void check_cocycle(const CocycleV1& c) {
  const Field& k = c.values[0].field();
  const auto v = v1_elements(k);
  for (std::size_t i = 0; i < 4; ++i) {
    if (c.values[i].is_zero()) fail(ErrorKind::InvalidInput, kModule, "cocycle value is zero");
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t ij = v1_index(v, v[i] * v[j]);
      if (!(c.values[ij] == c.values[i] * act(v[i], c.values[j]))) {
        fail(ErrorKind::PreconditionFailed, kModule, "cocycle identity fails");
      }
    }
  }
}

RatFunc hilbert90_cyclic(const RatFunc& lambda, const KMoebius& sigma, unsigned p) {
  auto order = projective_order(sigma, p);
  if (!order || *order != p) fail(ErrorKind::WrongOrder, kModule, "sigma does not have order p");
  return h90(lambda, sigma, p, 1);
}

RatFunc trivialize_cocycle_V1(const CocycleV1& c) {
  check_cocycle(c);
  const Field& k = c.values[0].field();
  const auto v = v1_elements(k);
  // Trivialize on <t -> -t>, then the corrected value on t -> 1/t lies in
  // k(t^2) and is trivialized there.
  const RatFunc mu1 = h90(c.values[1], v[1], 2, 1);
  const RatFunc corrected = c.values[2] * mu1 / act(v[2], mu1);
  if (!(act(v[1], corrected) == corrected)) fail(ErrorKind::Internal, kModule, "corrected cocycle not even");
  const RatFunc nu = h90(corrected, v[2], 2, 2);
  const RatFunc mu = mu1 * nu;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(mu * c.values[i] == act(v[i], mu))) fail(ErrorKind::Internal, kModule, "cocycle trivialization check failed");
  }
  return mu;
}

ElementaryClosure<SemidirectElt> semidirect_closure(const std::vector<SemidirectElt>& gens, unsigned p,
                                                   unsigned max_rank) {
  if (gens.empty()) fail(ErrorKind::InvalidInput, kModule, "empty generator list");
  return elementary_closure(gens, p, max_rank, SemidirectElt::identity(gens.front().field()), kModule);
}

std::vector<SemidirectElt> cp_times_cp(const Field& k, unsigned p) {
  auto zeta = k.primitive_root_of_unity(p);
  if (!zeta) fail(ErrorKind::RequiresFieldExtension, kModule, "missing primitive p-th root of unity");
  std::vector<SemidirectElt> out;
  FieldElement zi = k.one();
  for (unsigned i = 0; i < p; ++i, zi *= *zeta) {
    FieldElement zj = k.one();
    for (unsigned j = 0; j < p; ++j, zj *= *zeta) {
      out.emplace_back(KtMoebius::scaling(RatFunc::constant(zi)), KMoebius::scaling(zj));
    }
  }
  return out;
}

std::vector<SemidirectElt> vdelta_times_v1(const RatFunc& delta) {
  const Field& k = delta.field();
  const RatFunc one = RatFunc::one(k);
  const std::array<KtMoebius, 4> fib = {KtMoebius::identity(k), KtMoebius::scaling(-one), KtMoebius::inversion(delta),
                                         KtMoebius::inversion(-delta)};
  std::vector<SemidirectElt> out;
  for (const auto& g : v1_elements(k)) {
    for (const auto& m : fib) out.emplace_back(m, g);
  }
  return out;
}

bool same_group(const std::vector<SemidirectElt>& a, const std::vector<SemidirectElt>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  }
  return true;
}

SemidirectElt normalize_rank2_odd(const std::vector<SemidirectElt>& gens, unsigned p) {
  if (p < 3 || p % 2 == 0) fail(ErrorKind::InvalidInput, kModule, "normalize_rank2_odd needs an odd prime");
  const auto group = semidirect_closure(gens, p, 2);
  if (group.elements.size() != p * p) fail(ErrorKind::PreconditionFailed, kModule, "group order is not p^2");
  const Field& k = group.elements.front().field();
  const auto fib = fiber_part(group.elements);
  const auto img = image(group.elements);
  if (fib.size() != p || img.size() != p) {
    fail(ErrorKind::PreconditionFailed, kModule, "fiber part and image must both be cyclic of order p");
  }

  const SemidirectElt c0 = SemidirectElt::base(conjugate_to_Cp(img[1], p).g);
  const SemidirectElt fiber_gen = fib[1].conjugate_by(c0);
  const SemidirectElt c1 = SemidirectElt::fiber(conjugate_to_Cp(fiber_gen.m(), p).g);
  const SemidirectElt c10 = c1 * c0;

  // The lift of t -> zeta t is a homothety z -> lambda z of norm 1.
  const FieldElement zeta = *k.primitive_root_of_unity(p);
  const KMoebius sigma = KMoebius::scaling(zeta);
  const KMoebius sigma_before = sigma.conjugate_by(c0.gamma().inverse());
  const SemidirectElt lift = lift_of(group.elements, sigma_before).conjugate_by(c10);
  const RatFunc lambda = diagonal_factor(lift.m());
  const RatFunc mu = hilbert90_cyclic(lambda, sigma, p);
  const SemidirectElt total = SemidirectElt::fiber(KtMoebius::scaling(mu)) * c10;

  const auto target = cp_times_cp(k, p);
  for (const auto& b : group.basis) {
    if (std::find(target.begin(), target.end(), b.conjugate_by(total)) == target.end()) {
      fail(ErrorKind::Internal, kModule, "normalized group differs from C_p x C_p");
    }
  }
  return total;
}

Rank4Normalization normalize_rank4_two(const std::vector<SemidirectElt>& gens) {
  const auto group = semidirect_closure(gens, 2, 4);
  if (group.elements.size() != 16) fail(ErrorKind::PreconditionFailed, kModule, "group order is not 16");
  const Field& k = group.elements.front().field();
  const auto fib0 = fiber_part(group.elements);
  const auto img0 = image(group.elements);
  if (fib0.size() != 4 || img0.size() != 4) {
    fail(ErrorKind::PreconditionFailed, kModule, "fiber part and image must both be Klein four-groups");
  }

  // Image onto V_delta0 over k, then rescale t so that delta0 becomes +-1.
  const auto base_conj = klein_to_Vdelta(img0);
  const FieldElement inv_delta0 = base_conj.delta.inverse();
  auto c = inv_delta0.pth_root(2);
  if (!c) c = (-inv_delta0).pth_root(2);
  if (!c) fail(ErrorKind::RequiresFieldExtension, kModule, "image is not conjugate to V_1 over the base field");
  const KMoebius g0 = KMoebius::scaling(*c) * base_conj.g;
  const SemidirectElt c0 = SemidirectElt::base(g0);
  const auto v = v1_elements(k);
  for (const auto& x : img0) {
    if (std::find(v.begin(), v.end(), x.conjugate_by(g0)) == v.end()) {
      fail(ErrorKind::Internal, kModule, "image not moved to V_1");
    }
  }

  std::vector<KtMoebius> fib;
  for (const auto& x : fib0) fib.push_back(x.conjugate_by(c0).m());
  const auto fiber_conj = klein_to_Vdelta(fib);
  const SemidirectElt c10 = SemidirectElt::fiber(fiber_conj.g) * c0;
  const RatFunc& zeta = fiber_conj.delta;

  const SemidirectElt flip = SemidirectElt::fiber(KtMoebius::inversion(zeta));
  auto homothety_factor = [&](const KMoebius& s) {
    SemidirectElt x = lift_of(group.elements, s.conjugate_by(g0.inverse())).conjugate_by(c10);
    if (x.m().a().is_zero()) x = flip * x;
    RatFunc lambda = diagonal_factor(x.m());
    if (!(lambda * lambda == zeta / act(s, zeta))) fail(ErrorKind::Internal, kModule, "lift factor is not a square root");
    return lambda;
  };
  const RatFunc l1 = homothety_factor(v[1]);
  const RatFunc l2 = homothety_factor(v[2]);
  const CocycleV1 cocycle{{RatFunc::one(k), l1, l2, l1 * act(v[1], l2)}};
  const RatFunc mu = trivialize_cocycle_V1(cocycle);
  const RatFunc delta = zeta * mu * mu;
  for (const auto& s : v) {
    if (!(act(s, delta) == delta)) fail(ErrorKind::PreconditionFailed, kModule, "delta is not invariant under V_1");
  }
  const SemidirectElt total = SemidirectElt::fiber(KtMoebius::scaling(mu)) * c10;

  const auto target = vdelta_times_v1(delta);
  for (const auto& b : group.basis) {
    if (std::find(target.begin(), target.end(), b.conjugate_by(total)) == target.end()) {
      fail(ErrorKind::Internal, kModule, "normalized group differs from V_delta x V_1");
    }
  }
  return {total, delta};
}

}  // namespace cremona
