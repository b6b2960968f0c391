#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftforge {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;        // parse errors, bad arguments
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitValidation = 4;

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftforge
