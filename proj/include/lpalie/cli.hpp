#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpalie {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  /// analyze: every verdict inapplicable; witness: not a commutator combination.
  exit_inapplicable = 2,
  /// kp-check contradiction, failed witness verification, or failed selftest.
  exit_internal_check = 3,
};

/// Runs the tool on `args` (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lpalie
