#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fano {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitUndecided = 2,  // cost cap exceeded or no certificate
  kExitMismatch = 3,   // verification failure
};

// Environment variable holding the default brute-force cost cap.
inline constexpr const char* kCostCapEnv = "FANO_COST_CAP";

// Entry point shared by the executable and the tests. `args` excludes the
// program name: {"analyze", "--weights", "3,2,1"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fano
