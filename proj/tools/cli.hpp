#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sbtree::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kDomain = 3 };

/// Runs one command line (args exclude the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbtree::cli
