#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfvar::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kSuccess = 0, kVerdictFailure = 1, kUsageError = 2 };

/// Runs the front end on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfvar::cli
