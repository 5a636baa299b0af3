#ifndef QDRESS_CLI_HPP
#define QDRESS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qdress {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitVerifyFailed = 2,
    kExitBoundExceeded = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdress

#endif
