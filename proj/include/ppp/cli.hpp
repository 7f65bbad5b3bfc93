#ifndef PPP_CLI_HPP
#define PPP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ppp {

/// Runs one CLI command. Exit codes: 0 all checks pass, 1 verification
/// failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ppp

#endif
