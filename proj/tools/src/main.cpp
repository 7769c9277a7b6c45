#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace cremona::cli;

int main(int argc, char** argv) {
  CLI::App app{"Classify and compare finite groups of plane birational maps"};
  app.require_subcommand(1);
  bool json = false, timings = false;
  app.add_flag("--json", json, "Print the versioned JSON report");
  app.add_flag("--timings", timings, "Include stage timings");

  ClassifyOptions co;
  auto* classify = app.add_subcommand("classify", "Classify the group generated by de Jonquieres maps");
  classify->add_option("gens", co.gens, "Generators, e.g. \"(-x, y)\"");
  classify->add_option("--p", co.p, "The prime p")->required();
  classify->add_option("--field", co.field, "QQ | Fp:<q> | cyclo:<n>");
  classify->add_option("--surface", co.surface, "fermat | quartic:l0,l1,l2,l3,l4");

  ConjugateOptions cj;
  auto* conjugate = app.add_subcommand("conjugate", "Compare two c1 groups or two index sets");
  conjugate->add_option("--field", cj.field, "QQ | Fp:<q> | cyclo:<n>");
  conjugate->add_option("--I1", cj.i1, "First index set, comma separated");
  conjugate->add_option("--I2", cj.i2, "Second index set, comma separated");
  conjugate->add_option("--gens1", cj.gens1, "Generators of the first group");
  conjugate->add_option("--gens2", cj.gens2, "Generators of the second group");

  std::string inv_map, inv_field = "QQ";
  auto* invariant = app.add_subcommand("invariant", "Normalized fixed curve of an involution");
  invariant->add_option("map", inv_map, "The involution")->required();
  invariant->add_option("--field", inv_field, "QQ | Fp:<q> | cyclo:<n>");

  DelPezzoOptions dp;
  auto* delpezzo = app.add_subcommand("delpezzo", "Quartic del Pezzo surface data");
  delpezzo->add_option("lambdas", dp.lambdas, "Five pencil parameters, comma separated")->required();
  delpezzo->add_option("--field", dp.field, "QQ | Fp:<q> | cyclo:<n>");
  delpezzo->add_option("--fiber", dp.fiber, "Run the fiber statistics over F_q");

  JTableOptions jt;
  auto* jtable = app.add_subcommand("jtable", "Weyl group orders and Hurwitz bounds");
  jtable->add_option("--genera", jt.genera, "Genera for the Hurwitz table");
  jtable->add_option("--primes", jt.primes, "Primes for the Hurwitz table");
  jtable->add_option("--query", jt.query, "ell p r: does p^r divide |W|")->expected(3);

  auto* selftest = app.add_subcommand("selftest", "Quick internal consistency checks");

  CLI11_PARSE(app, argc, argv);

  Report r;
  if (classify->parsed()) r = cmd_classify(co);
  else if (conjugate->parsed()) r = cmd_conjugate(cj);
  else if (invariant->parsed()) r = cmd_invariant(inv_map, inv_field);
  else if (delpezzo->parsed()) r = cmd_delpezzo(dp);
  else if (jtable->parsed()) r = cmd_jtable(jt);
  else if (selftest->parsed()) r = cmd_selftest();

  if (json) {
    std::cout << r.to_json(timings).dump(2) << "\n";
  } else {
    (r.exit_code == 0 ? std::cout : std::cerr) << r.to_text(timings);
  }
  return r.exit_code;
}
