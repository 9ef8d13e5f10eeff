#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sccadl {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,         // success, every invariant holds
  kExitFailure = 1,    // error diagnostics or a violated invariant
  kExitUsage = 2,      // bad command line
  kExitLimit = 3,      // state limit exceeded
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sccadl
