#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace woideal::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kCapacity = 3,
  kInternal = 4,
};

/// Runs `wo-ideal <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace woideal::cli
