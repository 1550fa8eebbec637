#pragma once

#include <iosfwd>

namespace voxtopo {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitPipeline = 2,
  kExitIo = 3,
};

/// Runs one CLI invocation. Data goes to `out` (or --output), diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace voxtopo
