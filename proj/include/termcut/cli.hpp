#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace termcut {

// Exit codes shared by every subcommand: 0 = holds/clean, 1 = a checked
// condition or inequality is violated (witness printed), 2 = bad input or
// a resource limit.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

// Runs the command line (without argv[0]); all output goes to the given
// streams so tests can drive it in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace termcut
