#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace herd::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_claims_failed = 1,
  exit_input_error = 2,
  exit_infeasible = 3,
};

/// Run the `herd` command line.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace herd::cli
