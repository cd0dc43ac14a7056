#pragma once

// Named verification sweeps over small parameter ranges. Each suite checks a
// structural identity exhaustively (or on seeded random samples) and
// collects failures rather than stopping at the first one.

#include <cstdint>
#include <string>
#include <vector>

namespace unitensor {

struct SuiteOptions {
    /// Size bound; −1 selects the suite's default.
    int max_n = -1;
    /// Sample count for randomized suites; −1 selects the default.
    int samples = -1;
    std::uint64_t seed = 20240611;
};

struct SuiteResult {
    std::string name;
    std::int64_t checked = 0;
    std::vector<std::string> failures;
    double seconds = 0;
    bool ok() const { return failures.empty() && checked > 0; }
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

const std::vector<SuiteInfo>& suite_catalog();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace unitensor
