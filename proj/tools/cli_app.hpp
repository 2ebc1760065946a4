#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pointlike::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kDomain = 3,
    kInternal = 4,
};

/// Runs one CLI invocation. `args` excludes the program name. Data goes to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pointlike::cli
