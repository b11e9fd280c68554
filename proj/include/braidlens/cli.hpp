#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidlens {

/// Exit statuses of the command line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // verify-paper found a mismatch
  kExitUsage = 2,        // parse error or violated precondition
};

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidlens
