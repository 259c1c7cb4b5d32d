#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tancx {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// Description of the first failing case, empty when none failed.
    std::string first_failure;
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    bool ok() const;
};

/// Seeded invariant suites for every module. Deterministic for a given seed.
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace tancx
