#ifndef ROOKMN_CLI_HPP
#define ROOKMN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rookmn {

// Runs one command-line invocation (args excludes the program name).
// Results go to `out`, diagnostics to `err`. Returns the process exit code:
// 0 success, 1 usage/validation error, 2 a verification that ran and failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rookmn

#endif  // ROOKMN_CLI_HPP
