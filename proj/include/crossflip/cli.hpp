#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossflip {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitInternal = 3 };

/// Runs the `crossflip` command line. `args` excludes the program name.
/// Library errors exit with kExitCheckFailed and a diagnostic on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossflip
