#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anocan::cli {

enum ExitCode : int {
  kExitOk = 0,  // also: probe found the base composite
  kExitProbePrime = 1,
  kExitUsage = 2,
  kExitWorkLimit = 3,
  kExitEngineDisagreement = 4,
  kExitInternal = 70,
};

/// Runs the command line `args` (without the program name), writing the
/// record to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anocan::cli
