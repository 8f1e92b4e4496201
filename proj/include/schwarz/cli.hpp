#ifndef SCHWARZ_CLI_HPP
#define SCHWARZ_CLI_HPP

#include <iosfwd>

namespace schwarz
{

// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_io = 3 };

// Commands: nphi, extremal, hypnorm, coeffs, verify, figure1. Writes
// results to out and diagnostics to err; returns an ExitCode.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace schwarz

#endif
