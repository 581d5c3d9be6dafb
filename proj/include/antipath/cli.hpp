#pragma once

#include <iosfwd>

namespace antipath {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,          ///< parse/validation error, rejected certificate, stress failure
  kExitNotGuaranteed = 2,  ///< find: hypothesis fails and no path was produced
  kExitViolation = 3,      ///< find: a step failed under an asserted hypothesis
  kExitInexact = 4,        ///< oracle: budget exhausted, output is a lower bound
};

/// Entry point of the `antipath` tool; writes to `out`/`err` instead of the
/// process streams so that tests can drive it in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace antipath
