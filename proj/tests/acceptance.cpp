// Standalone acceptance runner: executes every end-to-end criterion at its
// pinned tolerance and prints one PASS/FAIL line per criterion. Exits 0 only
// if all of them hold. `--criterion <name>` runs a single one; `--list`
// prints the available names.

#include <gradim/checks.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    std::string only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--list") {
            for (const auto& name : gradim::check_names("all", /*include_strict=*/true))
                std::cout << name << "\n";
            return 0;
        }
        if (arg == "--criterion" && i + 1 < argc) {
            only = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--list | --criterion <name>]\n";
            return 2;
        }
    }

    int failures = 0;
    auto report = [&](const gradim::CheckResult& r) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.suite << "] " << r.name << " - "
                  << r.detail << "\n";
        if (!r.pass) ++failures;
    };

    if (!only.empty()) {
        report(gradim::run_check(only));
    } else {
        for (const auto& r : gradim::run_suite("all", /*include_strict=*/true)) report(r);
        std::cout << (failures == 0 ? "acceptance: all criteria hold"
                                    : "acceptance: " + std::to_string(failures) +
                                          " criterion(s) failed")
                  << "\n";
    }
    return failures == 0 ? 0 : 1;
}
