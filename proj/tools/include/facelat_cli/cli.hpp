#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facelat::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kInputError = 2 };

/// Runs one command line (args excludes the program name) writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace facelat::cli
