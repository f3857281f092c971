#ifndef CABINET_CLI_HPP
#define CABINET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cabinet {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,   ///< unreadable / malformed / invalid input or flags
    kExitConfigError = 2,  ///< annealing parameters or size limits violated
};

/**
 * Entry point of the `cabinet_psa` tool; `args` excludes the program name.
 * Subcommands: optimize, bench, reconfigure, oracle, render, generate, serve.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cabinet

#endif  // CABINET_CLI_HPP
