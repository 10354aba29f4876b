#ifndef CAUCHY_TOOLS_CLI_HPP
#define CAUCHY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cauchy::cli
{

// Exit codes shared by all subcommands.
inline constexpr int exit_ok = 0;        // proved, counterexample found, eval/selftest succeeded
inline constexpr int exit_refuted = 1;   // also: selftest failure
inline constexpr int exit_exhausted = 2; // also: pi01 bound reached
inline constexpr int exit_error = 3;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cauchy::cli

#endif
