#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aa::cli {

// Runs one CLI invocation. args excludes the program name. Reports go to
// `out` unless --out redirects them to a file; diagnostics go to `err`.
// Exit codes: 0 success, 1 validation error, 2 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aa::cli
