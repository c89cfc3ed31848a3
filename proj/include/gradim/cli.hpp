#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradim {

/// Runs one CLI invocation. Data goes to `out`, progress and errors to `err`.
/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gradim
