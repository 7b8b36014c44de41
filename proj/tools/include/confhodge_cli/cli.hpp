#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace confhodge::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,      // invariant violations, failed checks, unequal polynomials
  kParseError = 2,   // malformed documents, arguments or graph specs
  kScopeError = 3,   // E2 route on a graph that is not complete
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confhodge::cli
