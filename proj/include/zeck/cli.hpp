#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeck {

// Runs one CLI invocation. args excludes the program name. Results go to
// `out` (or the file named by --out where a command supports it), messages
// to `err`. Exit codes: 0 success, 2 usage error, 1 computation error
// (cap exceeded, identity failure in verify, engine invariant violations).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeck
