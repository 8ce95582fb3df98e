#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdsort::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,        // bad input, usage error, order mismatch
  kVerificationFailed = 2  // a check or cross-check did not hold
};

// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdsort::cli
