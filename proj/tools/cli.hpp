#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringcount::cli {

enum ExitCode : int {
  ok = 0,
  strict_mismatch = 2,
  usage = 64,
  guard = 65,
  internal = 70,
};

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringcount::cli
