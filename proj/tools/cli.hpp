#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entmeter::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kInvariantFailure = 2,
  kNumericFailure = 3,
};

/// Runs `entmeter <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entmeter::cli
