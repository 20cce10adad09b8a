#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitBudget = 2, kExitFinding = 3 };

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert
