#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kzr::cli {

/// Exit codes: 0 every check passed, 1 a check failed or the spectrum is not
/// integral, 2 bad input (selector, rho, grid, precision).
enum ExitCode : int { kPass = 0, kFail = 1, kBadInput = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kzr::cli
