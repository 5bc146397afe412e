#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxconn::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kDomainError = 3,
};

/// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxconn::cli
