#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resil::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kIoError = 3,
  kSizeRefused = 4,
};

// Runs the command line `args` (args[0] is the program name) and returns the
// exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace resil::cli
