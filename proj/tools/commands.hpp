#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cremona::cli {

/// Exit codes: 0 pass, 1 usage, 2 mathematical violation, 3 infrastructure (checkpoint, budget, io).
enum Exit : int { Ok = 0, Usage = 1, Violation = 2, Infrastructure = 3 };

/// Bumped whenever cached census results could change.
inline constexpr const char* kCacheVersion = "census-v3";

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cremona::cli
