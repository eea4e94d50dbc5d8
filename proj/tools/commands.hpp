#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace packdom::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kPropertyFalse = 1,
  kBadInput = 2,
  kInternal = 3,
  kGuard = 4,
};

/// Entry point of the `packdom` tool; `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace packdom::cli
