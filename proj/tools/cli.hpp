#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latdiss::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kImpossible = 10;
inline constexpr int kInvalid = 11;
inline constexpr int kInternal = 1;

// Runs the command line `args` (without the program name). Files named "-"
// are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace latdiss::cli
