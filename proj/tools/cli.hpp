#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace msym::cli {

/// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kAmbientMismatch = 2,
  kBadInput = 3,
  kCheckFailed = 4,
  kRelationFailed = 5,
};

/// Runs one CLI invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msym::cli
