#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biaslab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUntestable = 3;
inline constexpr int kExitInvalidInput = 4;

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`; diagnostics are a single line on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace biaslab::cli
