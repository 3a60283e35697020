#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordamalg::cli {

enum ExitCode : int {
  kOk = 0,
  kNotFound = 1,     // oracle found nothing, a check reported FAIL
  kInputError = 2,   // parse or validation error
  kUnsupported = 3,  // class without an amalgamation procedure
  kInternal = 4,     // a construction failed its own post-check
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordamalg::cli
