#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace corner::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,     // a verified inequality failed
  kParseError = 2,    // bad arguments or input files
  kInapplicable = 3,  // requested method does not apply to the input
  kCrossCheck = 4,    // independent computations disagree
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out is given; diagnostics go to `err`. Reads stdin for the file "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corner::cli
