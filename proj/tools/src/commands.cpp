#include "commands.hpp"

#include <chrono>
#include <functional>

#include "cremona/conjclass.hpp"
#include "cremona/delpezzo.hpp"
#include "parser.hpp"

namespace cremona::cli {
namespace {

using Clock = std::chrono::steady_clock;

/// Runs body, catching library errors into an error report.
Report guarded(const std::string& command, const std::function<void(Report&)>& body) {
  Report r;
  r.command = command;
  try {
    body(r);
  } catch (const Error& e) {
    Report err = error_report(command, e);
    err.timings = std::move(r.timings);
    return err;
  }
  return r;
}

template <class F>
auto timed(Report& r, const std::string& stage, F&& f) {
  const auto start = Clock::now();
  if constexpr (std::is_void_v<decltype(f())>) {
    f();
    r.timings.emplace_back(stage, std::chrono::duration<double>(Clock::now() - start).count());
  } else {
    auto out = f();
    r.timings.emplace_back(stage, std::chrono::duration<double>(Clock::now() - start).count());
    return out;
  }
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<PlaneMap> parse_maps(const std::vector<std::string>& srcs, const Field& k) {
  std::vector<PlaneMap> out;
  for (const auto& s : srcs) out.push_back(parse_map(s, k));
  return out;
}

Json index_sets(const std::vector<IndexSet>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(s.to_string());
  return a;
}

Json nf_json(const NFData& nf) {
  Json j;
  j["kind"] = nf.kind == NFKind::Empty ? "empty" : "hyperelliptic";
  j["genus"] = nf.genus;
  j["branch"] = nf.branch.to_string("x");
  j["infinity_branched"] = nf.infinity_branched;
  j["branch_points"] = nf.branch_points();
  return j;
}

Json points_json(const std::vector<ProjectivePoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p.to_string());
  return a;
}

std::array<FieldElement, 5> five_values(const std::string& src, const Field& k) {
  const auto v = parse_values(src, k);
  if (v.size() != 5) fail(ErrorKind::InvalidInput, "cli", "expected five pencil parameters, got " + std::to_string(v.size()));
  return {v[0], v[1], v[2], v[3], v[4]};
}

void c1_outcome(Report& r, const std::vector<PlaneMap>& gens) {
  const C1Classification c = timed(r, "c1_pipeline", [&] { return classify_c1(gens); });
  r.outcome = "type_c1";
  r.data["I"] = c.cls.canonical.to_string();
  r.data["orbit"] = index_sets(c.cls.orbit);
  r.data["delta"] = c.delta.to_string("x");
  r.data["conjugator"] = PlaneMap::from_semidirect(c.conjugator).to_string();
}

void type_c2(Report& r, const std::string& lambdas, const Field& k) {
  const QuarticDP s(five_values(lambdas, k));
  const GSReport gs = GS_group(s);
  r.outcome = "type_c2";
  Json lam = Json::array();
  for (const auto& l : s.lambdas()) lam.push_back(l.to_string());
  r.data["lambdas"] = lam;
  r.data["group_order"] = gs.elements.size();
  r.data["hyperplane_fixing"] = gs.hyperplane_fixing;
  r.data["Jbar"] = points_json(Jbar(s));
}

void type_b(Report& r, const Field& k) {
  const CharacterReport c = fermat_cubic_check(k);
  if (!c.exponent_ok || !c.preserves_form || !c.smooth) {
    fail(ErrorKind::Internal, "cli", "diagonal 3-torsion does not act on the Fermat cubic");
  }
  r.outcome = "type_b";
  r.data["p"] = 3;
  r.data["rank"] = 3;
  r.data["group_order"] = c.group_order;
  r.data["cubic_monomials"] = c.monomials;
  r.data["invariant_cubics"] = c.invariant;
  r.data["semi_invariant_lines"] = c.semi_invariant_lines;
}

}  // namespace

Report cmd_classify(const ClassifyOptions& o) {
  return guarded("classify", [&](Report& r) {
    const Field k = Field::parse(o.field);
    const unsigned p = o.p;
    if (!is_prime(p)) fail(ErrorKind::InvalidInput, "cli", std::to_string(p) + " is not prime");
    if (k.characteristic() == p) fail(ErrorKind::InvalidInput, "cli", "p equals the characteristic of the field");
    r.data["field"] = k.name();
    r.data["p"] = p;

    if (!o.surface.empty()) {
      if (!o.gens.empty()) r.note("generators ignored when a surface is given");
      if (o.surface == "fermat") {
        if (p != 3) fail(ErrorKind::InvalidInput, "cli", "the Fermat cubic case needs p = 3");
        timed(r, "surface", [&] { type_b(r, k); });
      } else if (o.surface.rfind("quartic:", 0) == 0) {
        if (p != 2) fail(ErrorKind::InvalidInput, "cli", "the quartic del Pezzo case needs p = 2");
        timed(r, "surface", [&] { type_c2(r, o.surface.substr(8), k); });
      } else {
        fail(ErrorKind::InvalidInput, "cli", "unknown surface '" + o.surface + "'");
      }
      return;
    }

    const std::vector<PlaneMap> gens = timed(r, "parse", [&] { return parse_maps(o.gens, k); });
    if (gens.empty()) fail(ErrorKind::InvalidInput, "cli", "no generators given");
    ElementaryGroup g;
    try {
      g = timed(r, "closure", [&] { return closure(gens, p, p == 2 ? 4 : 2); });
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonCommuting && e.kind() != ErrorKind::WrongOrder &&
          e.kind() != ErrorKind::ClosureExceeded) {
        throw;
      }
      r.outcome = "not_elementary";
      r.data["reason"] = std::string(to_string(e.kind()));
      r.note(e.what());
      return;
    }
    r.data["rank"] = g.rank;
    r.data["order"] = g.elements.size();

    if (p == 2 && g.rank == 4) {
      c1_outcome(r, g.generators);
    } else if (p != 2 && g.rank == 2) {
      std::vector<SemidirectElt> sd;
      for (const auto& x : g.generators) sd.push_back(x.to_semidirect());
      const SemidirectElt c = timed(r, "normalize", [&] { return normalize_rank2_odd(sd, p); });
      r.outcome = "type_a";
      r.data["conjugator"] = PlaneMap::from_semidirect(c).to_string();
      if (p == 3) r.note("rank 2 at p = 3: diagonal torus of PGL_3; rank 3 is the Fermat cubic (--surface fermat)");
    } else {
      r.outcome = "submaximal";
      r.note("rank below the maximum for de Jonquieres groups at this p");
    }
  });
}

Report cmd_conjugate(const ConjugateOptions& o) {
  return guarded("conjugate", [&](Report& r) {
    const Field k = Field::parse(o.field);
    r.data["field"] = k.name();
    ConjClassC1 a{IndexSet(k), {}}, b{IndexSet(k), {}};
    if (o.i1 && o.i2) {
      a = canonicalize(IndexSet(k, parse_values(*o.i1, k)));
      b = canonicalize(IndexSet(k, parse_values(*o.i2, k)));
    } else if (!o.gens1.empty() && !o.gens2.empty()) {
      a = timed(r, "first", [&] { return classify_c1(parse_maps(o.gens1, k)).cls; });
      b = timed(r, "second", [&] { return classify_c1(parse_maps(o.gens2, k)).cls; });
    } else {
      fail(ErrorKind::InvalidInput, "cli", "give either --I1 and --I2 or --gens1 and --gens2");
    }
    const bool same = a.canonical == b.canonical;
    r.outcome = same ? "conjugate" : "not_conjugate";
    r.data["canonical1"] = a.canonical.to_string();
    r.data["canonical2"] = b.canonical.to_string();
    r.data["orbit1"] = index_sets(a.orbit);
    r.data["orbit2"] = index_sets(b.orbit);
  });
}

Report cmd_invariant(const std::string& map, const std::string& field) {
  return guarded("invariant", [&](Report& r) {
    const Field k = Field::parse(field);
    const PlaneMap f = parse_map(map, k);
    r.data["field"] = k.name();
    r.data["map"] = f.to_string();
    const NFData nf = fixed_curve(f);
    r.outcome = nf.kind == NFKind::Empty ? "empty" : "curve";
    r.data["nf"] = nf_json(nf);
  });
}

Report cmd_delpezzo(const DelPezzoOptions& o) {
  return guarded("delpezzo", [&](Report& r) {
    const Field k = Field::parse(o.field);
    const QuarticDP s(five_values(o.lambdas, k));
    r.outcome = "quartic_del_pezzo";
    r.data["field"] = k.name();
    Json lam = Json::array();
    for (const auto& l : s.lambdas()) lam.push_back(l.to_string());
    r.data["lambdas"] = lam;

    r.data["pencil_determinant"] = pencil_determinant(s).to_string("s");
    Json sing = Json::array();
    for (const auto& m : timed(r, "pencil", [&] { return pencil_singular(s); })) {
      Json row;
      row["parameter"] = m.parameter.to_string();
      row["rank"] = m.rank;
      Json ker = Json::array();
      for (unsigned i : m.kernel) ker.push_back("e" + std::to_string(i));
      row["kernel"] = ker;
      sing.push_back(row);
    }
    r.data["singular_members"] = sing;

    const GSReport gs = timed(r, "GS", [&] { return GS_group(s); });
    Json gsj;
    gsj["order"] = gs.elements.size();
    gsj["preserves_quadrics"] = gs.preserves_quadrics;
    gsj["hyperplane_fixing"] = gs.hyperplane_fixing;
    gsj["reflections_fix_point_and_hyperplane"] = gs.reflections_fix_point_and_hyperplane;
    Json prof = Json::array();
    for (const auto& [i, nf] : gs_nf_profile(s)) {
      Json row;
      row["element"] = gs.elements[i].to_string();
      row["nf"] = nf_json(nf);
      prof.push_back(row);
    }
    gsj["nf_profile"] = prof;
    r.data["GS"] = gsj;
    r.data["Jbar"] = points_json(timed(r, "Jbar", [&] { return Jbar(s); }));

    if (o.fiber) {
      const FiberStats st = timed(r, "fiber", [&] { return fiber_statistics(*o.fiber); });
      Json f;
      f["q"] = st.q;
      f["zeta"] = st.zeta.to_string();
      f["alphas"] = st.alphas;
      f["singletons"] = st.singletons;
      f["fraction"] = st.fraction();
      Json al = Json::array();
      for (const auto& a : st.singleton_alphas) al.push_back(a.to_string());
      f["singleton_alphas"] = al;
      r.data["fiber"] = f;
      if (st.singletons == 0) r.note("no singleton fiber over F_" + std::to_string(*o.fiber));
      if (st.fraction() <= 0.5) r.note("singleton fraction at most 1/2 over F_" + std::to_string(*o.fiber));
    }
  });
}

Report cmd_jtable(const JTableOptions& o) {
  return guarded("jtable", [&](Report& r) {
    r.outcome = "tables";
    Json w = Json::array();
    for (const auto& e : weyl_table()) {
      Json row;
      row["ell"] = e.ell;
      row["root_system"] = e.root_system;
      std::string fact;
      for (const auto& [q, a] : e.factorization) {
        if (!fact.empty()) fact += " * ";
        fact += std::to_string(q) + (a > 1 ? "^" + std::to_string(a) : "");
      }
      row["factorization"] = fact;
      row["order"] = e.order;
      w.push_back(row);
    }
    r.data["weyl"] = w;
    Json h = Json::array();
    for (unsigned g : o.genera) {
      for (unsigned p : o.primes) {
        if (!is_prime(p)) fail(ErrorKind::InvalidInput, "cli", std::to_string(p) + " is not prime");
        Json row;
        row["g"] = g;
        row["p"] = p;
        row["max_rank"] = hurwitz_max_rank(g, p);
        h.push_back(row);
      }
    }
    r.data["hurwitz"] = h;
    if (o.query) {
      if (o.query->size() != 3) fail(ErrorKind::InvalidInput, "cli", "--query takes ell, p, r");
      const auto& q = *o.query;
      Json row;
      row["ell"] = q[0];
      row["p"] = q[1];
      row["r"] = q[2];
      row["divides"] = weyl_table_query(q[0], q[1], q[2]);
      r.data["query"] = row;
    }
  });
}

Report cmd_selftest() {
  return guarded("selftest", [&](Report& r) {
    const Field qq = Field::rationals();
    const Field f31 = Field::prime(31);
    std::vector<std::pair<std::string, std::function<bool()>>> checks = {
        {"parse_involution", [&] { return parse_map("(-x, y)", qq) == PlaneMap::diagonal(qq.from_int(-1), qq.one()); }},
        {"parse_shape_error",
         [&] {
           try {
             parse_map("(y, x)", qq);
           } catch (const Error& e) {
             return e.kind() == ErrorKind::ShapeError;
           }
           return false;
         }},
        {"c1_round_trip",
         [&] {
           const IndexSet i(qq, {qq.zero()});
           return recover_I(build_GI(i)).canonical == IndexSet(qq, {qq.from_int(-6)});
         }},
        {"weyl_E8", [&] { return weyl_table()[4].order == 696729600ULL && weyl_table_query(8, 5, 2); }},
        {"hurwitz", [&] { return hurwitz_max_rank(3, 2) == 3 && hurwitz_max_rank(4, 3) == 2; }},
        {"j_1728", [&] { return jfun(qq.from_int(-1)) == qq.from_int(1728) && jfun(qq.from_int(2)) == qq.from_int(1728); }},
        {"fermat_characters",
         [&] {
           const CharacterReport c = fermat_cubic_check(Field::prime(7));
           return c.monomials == 20 && c.invariant == 4 && c.semi_invariant_lines == 16;
         }},
        {"quadric_characters",
         [&] {
           const CharacterReport c = quadric_character_check();
           return c.monomials == 15 && c.invariant == 5 && c.semi_invariant_lines == 10;
         }},
        {"sigma_f_centralizer",
         [&] {
           const PlaneMap s = sigma_f(RatFunc::variable(f31) + RatFunc::one(f31), 5);
           const PlaneMap d = PlaneMap::diagonal(*f31.primitive_root_of_unity(5), f31.one());
           return s * d == d * s;
         }},
        {"jacobian_pointwise", [&] { return jacobian_identity_pointwise(Field::prime(101), 20, 1); }},
    };
    Json results;
    bool all = true;
    for (const auto& [name, check] : checks) {
      bool ok = false;
      try {
        ok = timed(r, name, check);
      } catch (const Error& e) {
        r.note(name + ": " + e.what());
      }
      results[name] = ok ? "pass" : "fail";
      all = all && ok;
    }
    r.data["checks"] = results;
    r.outcome = all ? "pass" : "fail";
    r.exit_code = all ? 0 : 1;
  });
}

}  // namespace cremona::cli
