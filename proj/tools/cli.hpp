#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclo::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInconsistency = 2,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
