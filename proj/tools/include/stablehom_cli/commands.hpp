#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablehom::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_parse = 2,
  exit_validation = 3,
  exit_guardrail = 4,
  exit_precondition = 5,
};

/// Runs one command line (without the program name) and returns its exit
/// status. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stablehom::cli
