// Command-line front end.  Every verb maps to one library operation; the
// CLI layer only parses options, renders output, and translates errors into
// exit codes.  See LICENSE.
#ifndef DMW_CLI_HPP
#define DMW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dmw {

// Runs the tool on `args` (without the program name), writing results to
// `out` and diagnostics to `err`.  Exit codes:
//   0  success
//   2  validation error (bad flags, unsupported family/char combination)
//   3  resource guard tripped (enumeration or table too large)
//   4  selftest failure
int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err);

}  // namespace dmw

#endif  // DMW_CLI_HPP
