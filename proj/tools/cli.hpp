#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loglambert::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,       // domain, singularity, unsupported-case and no-solution errors
  kConvergence = 3,  // iteration or quadrature failed to converge
};

/// Runs one CLI invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loglambert::cli
