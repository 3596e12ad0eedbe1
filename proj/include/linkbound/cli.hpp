#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkbound {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitInvariant = 3,
  kExitInconsistent = 4,
  kExitVerify = 5,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkbound
