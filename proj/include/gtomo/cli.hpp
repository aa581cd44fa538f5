#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gtomo::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kNumerical = 3 };

struct RunConfig {
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string registry_path;
  std::string output_path;
};

/// Parses argv, runs one subcommand and writes its document to `out`
/// (or to --output). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gtomo::cli
