// Command-line front end. Exposed as a function so tests can drive it
// without spawning processes.

#ifndef NUMSG_CLI_APP_HPP_
#define NUMSG_CLI_APP_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace numsg::cli {

  enum ExitCode : int {
    kSuccess           = 0,
    kInvalidParameters = 2,
    kLimitExceeded     = 3,
    kInternalError     = 4,
  };

  // args excludes the program name. Normal output goes to out unless --out
  // names a file; diagnostics go to err.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace numsg::cli

#endif  // NUMSG_CLI_APP_HPP_
