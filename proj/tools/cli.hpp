#ifndef CAUSALID_TOOLS_CLI_HPP
#define CAUSALID_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace causalid::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotIdentified = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Runs the causalid command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace causalid::cli

#endif  // CAUSALID_TOOLS_CLI_HPP
