#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polcovar {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitInvalidPattern = 3,
  kExitLimit = 4,
  kExitInternal = 5,
};

/// Runs the polcovar command line. `args` excludes the program name.
/// Patterns given with --stdin are read from `in`.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polcovar
