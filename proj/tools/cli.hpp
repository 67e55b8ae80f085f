#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewbrace::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMathFailure = 1,  // an identity or the braid relation fails; a witness is printed
  kInputError = 2,   // unreadable, malformed or invalid input, bad arguments
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewbrace::cli
