#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordcalc::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,  // also usage errors
  kDomainError = 2,
  kOutOfScope = 3,
  kSelftestMismatch = 4,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordcalc::cli
