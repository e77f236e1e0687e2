#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbank::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kScriptOrParseError = 2,
};

// Entry point of the `qbank` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qbank::cli
