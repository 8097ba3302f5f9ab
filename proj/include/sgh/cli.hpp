#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitInputError = 2;

// Runs the command line `args` (without the program name) and returns the
// process exit code: 0 on success, 1 when a checked invariant fails, 2 on
// malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3..8" or "5"; throws sgh::InvalidArgument.
std::pair<long long, long long> parse_range(const std::string& text);

}  // namespace sgh::cli
