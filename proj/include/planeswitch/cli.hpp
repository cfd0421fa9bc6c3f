#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planeswitch::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kInvalidSpec = 2,
    kSizeRefusal = 3,
    kVerificationFailure = 4,
};

/// Runs the command line given argv-style arguments (without the program
/// name). Writes results to `out`, diagnostics to `err`; returns the exit
/// code. The PLANESWITCH_MAX_BITS environment variable may lower (never
/// raise) the enumeration caps.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planeswitch::cli
