#ifndef REPCA_CLI_HPP
#define REPCA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace repca {

// Runs one subcommand. Returns 0 on success, 2 on validation errors (bad
// flags, malformed or schema-violating JSON), 3 on mathematical precondition
// failures. Results go to `out` as JSON; errors go to `err` as
// {"error": kind, "detail": message}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace repca

#endif
