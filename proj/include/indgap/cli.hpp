#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indgap {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitMismatch = 2,
  kExitInternalError = 3,
};

/// Runs the CLI on an argument vector (args[0] is the program name), reading
/// stdin input from `in`. One record per input graph goes to `out`;
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace indgap
