#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcstab::cli {

/// Process exit codes.
enum ExitStatus : int {
  kSuccess = 0,
  kUsageError = 1,
  kInputError = 2,
  kSoundnessError = 3,
};

/// Runs one command line (args excludes the program name). Machine-readable
/// output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dcstab::cli
