#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellgenus::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

/// Run the command line `args` (without the program name). Reports go to
/// `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellgenus::cli
