#pragma once

#include <string>
#include <vector>

namespace gradim {

struct CheckResult {
    std::string name;
    std::string suite;
    bool pass = false;
    std::string detail;
};

/// Named end-to-end checks, grouped into the suites exposed by the CLI
/// (tables, identities, formulas, asymptotics). Checks marked strict are the
/// assertions only the standalone acceptance runner enforces; `verify`
/// reports their subject matter without asserting it.
std::vector<std::string> check_names(const std::string& suite, bool include_strict);

/// Runs one check by name; throws std::invalid_argument for unknown names.
CheckResult run_check(const std::string& name);

/// Runs a suite ("tables", "identities", "formulas", "asymptotics" or "all").
std::vector<CheckResult> run_suite(const std::string& suite, bool include_strict);

} // namespace gradim
