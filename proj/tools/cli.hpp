#ifndef WORMCALC_TOOLS_CLI_HPP
#define WORMCALC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wormcalc::cli {

enum ExitCode : int {
    success = 0,
    usage_error = 1,
    precondition_violation = 2,
    internal_failure = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wormcalc::cli

#endif
