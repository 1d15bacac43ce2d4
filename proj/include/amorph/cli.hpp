#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace amorph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFalsified = 3;

/// Runs one command line (program name excluded) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amorph::cli
