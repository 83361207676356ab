// cli.hpp -- the obzcp command-line front end as a callable library.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace obzcp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kUsage = 2,
    kResourceExhausted = 3,
};

// Environment variable holding the default --workers value.
inline constexpr const char* kWorkersEnv = "OBZCP_WORKERS";

// Parses args (args[0] is the program name) and runs one subcommand.
// Results go to `out`; usage errors, progress and checkpoints go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace obzcp::cli
