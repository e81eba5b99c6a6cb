#pragma once

#include <string>
#include <vector>

namespace chow {

// One verified identity or property inside a suite.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // on failure: what was expected / what came out
};

// Result of one verification suite. `statement` is the mathematical claim
// the suite certifies, in plain text.
struct SuiteReport {
    std::string suite;
    std::string statement;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failed_count() const {
        int k = 0;
        for (const auto& c : checks)
            if (!c.pass) ++k;
        return k;
    }
    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

}  // namespace chow
