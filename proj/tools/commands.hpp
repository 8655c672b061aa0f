#pragma once

#include <ostream>
#include <string>

namespace dimspec::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kViolations = 1,  // sweep finished and found counterexamples
  kInputError = 2,
  kNumericalError = 3,
  kSizeGuard = 4,
};

inline constexpr int kFormatVersion = 1;

/// Entry point shared by the `dimspec` binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "sha256:<hex>" of the given bytes.
std::string digest(const std::string& bytes);

}  // namespace dimspec::cli
