#pragma once

#include <string>

#include "qdt/config.hpp"
#include "qdt/series.hpp"

namespace qdt {

enum class OutputFormat { json, csv, table };

OutputFormat parse_output_format(const std::string& s);

struct RunOptions {
  OutputFormat format = OutputFormat::table;
  // Audit failures turn into exit code 3.
  bool strict = false;
  // Forces the normalized framed series regardless of the config.
  bool normalized = false;
  Exec exec = Exec::parallel;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
  // Error or audit diagnostics for stderr.
  std::string diagnostics;
};

namespace exit_codes {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int precondition = 2;
inline constexpr int audit = 3;
}  // namespace exit_codes

// Runs one of dt, framed, local, betti, nullcone, oracle, check. Never throws
// for engine errors; they are mapped to exit codes.
RunResult run(const std::string& command, const JobConfig& cfg, const RunOptions& opts);

// Class name of a library exception, e.g. "SymmetryViolation".
std::string error_kind(const std::exception& e);

}  // namespace qdt
