#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selberg {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,            // usage, parse or I/O error
    kExitDisagreement = 2,     // dimension routes disagree
    kExitAssumptionViolated = 3,
};

/// Runs the tool with `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selberg
