#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace provstream::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitUnknownQuery = 2;
inline constexpr int kExitPositionUnavailable = 3;

/// Runs the command line `args` (args[0] is the program name). "-" as input
/// path reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace provstream::cli
