#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ocrank::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNotScattered = 2,
  kUnknown = 3,
  kCertificationFailure = 4,
};

/// Runs `ocrank <cmd> <fixture> [flags]` with `args` excluding the program
/// name. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocrank::cli
