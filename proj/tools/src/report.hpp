#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cremona/error.hpp"

namespace cremona::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportFormat = "cremona-report/1";

/// Result of one subcommand. Keys keep insertion order, so equal inputs give
/// byte-identical output.
struct Report {
  std::string command;
  std::string outcome;
  Json data = Json::object();
  std::vector<std::string> diagnostics;
  std::vector<std::pair<std::string, double>> timings;  // seconds
  int exit_code = 0;

  void note(std::string line) { diagnostics.push_back(std::move(line)); }

  Json to_json(bool with_timings) const;
  std::string to_text(bool with_timings) const;
};

/// 0 success, 2 bad input, 3 needs a field extension, 1 anything else.
int exit_code_for(ErrorKind kind);

/// Report for a command that failed with a library error.
Report error_report(const std::string& command, const Error& e);

}  // namespace cremona::cli
