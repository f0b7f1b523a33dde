#ifndef TORIC_CLI_HPP
#define TORIC_CLI_HPP

// Command-line front end. Every computing subcommand prints a run manifest:
// the arguments, input digests, seed, displacement vectors and the exact
// output. `replay` re-runs a manifest and compares the output bytes.

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

inline constexpr const char* kToolVersion = "toric-chow 1.0.0";

/// Runs one command (arguments without the program name). Output is written
/// only on success; diagnostics go to `err`. Returns the exit code: 0 ok,
/// 1 replay mismatch or internal error, 2 invalid input, 3 precondition
/// violated, 4 no generic displacement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric

#endif  // TORIC_CLI_HPP
