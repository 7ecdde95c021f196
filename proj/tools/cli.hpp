#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mincut::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kStructural = 3,
  kMismatch = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mincut::cli
