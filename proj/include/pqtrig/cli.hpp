#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqtrig::cli {

enum ExitCode : int {
    kSatisfied = 0,
    kFailed = 1,  // violations found or evaluation failed
    kUsage = 2,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqtrig::cli
