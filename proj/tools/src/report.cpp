#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace cremona::cli {
namespace {

void write_text(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      write_text(out, v, indent + 1);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << it.key() << ":\n";
      for (const auto& row : v) {
        out << pad << "  -\n";
        write_text(out, row, indent + 2);
      }
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

Json Report::to_json(bool with_timings) const {
  Json j;
  j["format"] = kReportFormat;
  j["command"] = command;
  j["outcome"] = outcome;
  j["data"] = data;
  j["diagnostics"] = diagnostics;
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [stage, seconds] : timings) t[stage] = seconds;
    j["timings"] = t;
  }
  return j;
}

std::string Report::to_text(bool with_timings) const {
  std::ostringstream out;
  out << command << ": " << outcome << "\n";
  write_text(out, data, 1);
  for (const auto& d : diagnostics) out << "  note: " << d << "\n";
  if (with_timings) {
    for (const auto& [stage, seconds] : timings) {
      out << "  time " << stage << ": " << std::fixed << std::setprecision(4) << seconds << " s\n";
    }
  }
  return out.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::SyntaxError:
    case ErrorKind::ShapeError:
    case ErrorKind::FieldMismatch:
    case ErrorKind::NotInvolution:
    case ErrorKind::DivisionByZero:
    case ErrorKind::PreconditionFailed:
      return 2;
    case ErrorKind::RequiresFieldExtension:
      return 3;
    default:
      return 1;
  }
}

Report error_report(const std::string& command, const Error& e) {
  Report r;
  r.command = command;
  r.outcome = "error";
  r.data["kind"] = std::string(to_string(e.kind()));
  r.data["module"] = e.module();
  r.data["message"] = e.what();
  r.exit_code = exit_code_for(e.kind());
  return r;
}

}  // namespace cremona::cli
