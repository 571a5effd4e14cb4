#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmbs {

/// Exit codes of the command-line frontend.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitUnsupported = 2,
    kExitVerificationFailed = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Exactly one
/// JSON document (plus newline) is written to `out`; `in` supplies the
/// problem when no path (or "-") is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace mmbs
