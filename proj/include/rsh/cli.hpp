#ifndef RSH_CLI_HPP
#define RSH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rsh {

// Entry point behind the `rsh` binary. Exit codes: 0 success, 2 usage
// error, 1 failed verification or an oracle size cap.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace rsh

#endif
