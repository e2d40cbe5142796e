#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sbcas {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitUndefined = 3, kExitCounterexample = 4 };

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbcas
