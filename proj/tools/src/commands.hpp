#pragma once

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace cremona::cli {

struct ClassifyOptions {
  std::vector<std::string> gens;
  unsigned p = 2;
  std::string field = "QQ";
  std::string surface;  // "", "fermat" or "quartic:l0,l1,l2,l3,l4"
};

struct ConjugateOptions {
  std::string field = "QQ";
  std::optional<std::string> i1, i2;   // comma-separated index sets
  std::vector<std::string> gens1, gens2;
};

struct DelPezzoOptions {
  std::string field = "QQ";
  std::string lambdas;  // five comma-separated values
  std::optional<unsigned> fiber;
};

struct JTableOptions {
  std::vector<unsigned> genera{2, 3, 4, 5, 6};
  std::vector<unsigned> primes{2, 3, 5, 7, 11};
  std::optional<std::vector<unsigned>> query;  // ell, p, r
};

/// Each command catches library errors and returns an error report.
Report cmd_classify(const ClassifyOptions& o);
Report cmd_conjugate(const ConjugateOptions& o);
Report cmd_invariant(const std::string& map, const std::string& field);
Report cmd_delpezzo(const DelPezzoOptions& o);
Report cmd_jtable(const JTableOptions& o);
Report cmd_selftest();

}  // namespace cremona::cli
