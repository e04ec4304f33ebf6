#pragma once

#include "latmeans/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace latmeans::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kInconclusive = 3,
};

enum class OutputFormat { json, csv, human };

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  verify::Tolerances tolerances;
  int s = 2;
  std::size_t n = 3;
  std::size_t d = 1;
  OutputFormat format = OutputFormat::json;
};

/// Entry point shared by the executable and the tests. Writes results to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Exit code for a single report: pass -> 0, fail -> 1,
/// precondition_violated -> 2, inconclusive -> 3.
int exit_code_for(const verify::VerificationReport& r);

}  // namespace latmeans::cli
