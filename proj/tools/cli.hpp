#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subreg::cli {

enum ExitCode : int { ok = 0, check_failed = 1, input_error = 2 };

/// Parses and runs one command.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subreg::cli
