#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hardy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// Runs one command line (args exclude the program name). Results go to out unless
/// --out is given; diagnostics go to err as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hardy::cli
