#ifndef MOMSYM_CLI_H_
#define MOMSYM_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace momsym::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kShapeError = 3,
  kNumericError = 4,
  kFailedClaim = 5,
};

// Entry point shared by the momsym executable and the CLI tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace momsym::cli

#endif  // MOMSYM_CLI_H_
