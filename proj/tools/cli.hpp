#ifndef LNDT_TOOLS_CLI_HPP
#define LNDT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lndt::cli {

/// Exit codes of lndtool.
enum ExitCode : int {
  kSuccess = 0,   // success or positive decision
  kNegative = 1,  // any=none, all=counterexample, eq=false, member=none, check=ill-formed
  kInputError = 2,  // value parse error or ill-formed input
  kUsage = 3,
};

/// Runs lndtool with `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lndt::cli

#endif  // LNDT_TOOLS_CLI_HPP
