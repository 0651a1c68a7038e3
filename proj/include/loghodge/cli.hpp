#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace loghodge::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;   // theorem-check violation or cross-check mismatch
inline constexpr int kInputError = 2;    // bad flags, unreadable or malformed input
inline constexpr int kInternalError = 3; // an internal invariant failed (a bug)

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loghodge::cli
