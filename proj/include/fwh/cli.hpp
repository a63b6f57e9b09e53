#ifndef FWH_CLI_HPP
#define FWH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fwh {

/// Runs one command line (args exclude the program name) against the given
/// streams. Returns the process exit code: 0 for pass/clean verdicts, 2 for
/// fail/flagged verdicts, 1 for usage or internal errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace fwh

#endif  // FWH_CLI_HPP
