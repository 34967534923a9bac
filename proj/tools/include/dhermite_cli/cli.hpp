#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dhermite::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 success, 1 a verification failure, 2 bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dhermite::cli
