#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexdense::cli {

/// Exit codes: 0 computed, 1 property refuted or witness found where absence
/// was asked for, 2 input or resource error.
enum ExitCode : int { kOk = 0, kRefuted = 1, kError = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexdense::cli
