#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boostcoh::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,      ///< bad flag or value outside the physical domain
  kExitNumerical = 3,  ///< quadrature tolerance not met
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Subcommands: wigner, coherence, sweep,
/// figure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boostcoh::cli
