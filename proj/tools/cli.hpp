#pragma once

#include <iosfwd>

namespace infodyn::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalFailure = 1,
  kUsageError = 2,
};

/// Runs the `infodyn` command line. Reports go to `out`, diagnostics and
/// warnings to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infodyn::cli
