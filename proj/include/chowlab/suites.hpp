#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chowlab/report.hpp"

namespace chow {

struct SuiteOptions {
    uint64_t seed = 7;
    int random = 100;          // sample count for the randomized suites
    int nmax = 4;              // cube dimension bound for the face table
    std::string corpus = "corpus";
};

// One registered verification suite. `statement` is the exact claim the
// suite certifies; the runner refuses to execute a suite whose statement is
// empty, so every name stays pinned to one claim.
struct SuiteSpec {
    std::string name;
    std::string statement;
    std::function<SuiteReport(const SuiteOptions&)> run;
};

const std::vector<SuiteSpec>& suite_registry();
std::vector<std::string> suite_names();
const SuiteSpec* find_suite(const std::string& name);

// Runs one suite with timing filled in. Throws std::invalid_argument for an
// unknown name and std::logic_error for a spec without its statement.
SuiteReport run_suite(const SuiteSpec& spec, const SuiteOptions& opts);
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace chow
