#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kHeadlineFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kMathDomain = 3;
inline constexpr int kIo = 4;

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlab::cli
