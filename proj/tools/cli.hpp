#pragma once

#include <iosfwd>

namespace empire::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,            // success, colourable, satisfiable
  kFailure = 1,       // bad input file or failed construction
  kUsage = 2,         // unknown subcommand or bad flags
  kTimeout = 3,       // solver budget spent
  kNegative = 10,     // not colourable, unsatisfiable, colouring invalid
};

/// Runs the empire tool on argv. Reports go to `out`, diagnostics to `err`;
/// files named "-" are stdin/stdout.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace empire::cli
