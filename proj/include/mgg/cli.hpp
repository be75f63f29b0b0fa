#pragma once

#include <iosfwd>

namespace mgg {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitIndeterminate = 2,
  kExitDisagreement = 3,
  kExitNotApplicable = 4,
  kExitInfeasibleGrid = 5,
};

/// Entry point behind the `mgg` binary; streams are injectable for tests.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mgg
