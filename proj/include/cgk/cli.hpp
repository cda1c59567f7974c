#ifndef CGK_CLI_HPP
#define CGK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cgk {

/// Runs `cgk` with `args` (program name excluded).
/// Exit codes: 0 ok, 1 a verification reported failure, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgk

#endif  // CGK_CLI_HPP
