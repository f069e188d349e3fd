#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbn::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,     // well-formed negative answer: not controllable, decision "no", unreachable
    kUsage = 2,        // bad arguments or unreadable / malformed input files
    kLimit = 3,        // size guard or search budget hit
    kInternal = 4,     // self-check failed (should not happen)
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cbn::cli
