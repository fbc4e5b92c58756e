#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kcut::verify {

inline constexpr std::uint64_t kDefaultSeed = 20260816;

struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::vector<std::string> lines;
};

/// Runs one acceptance criterion (1..11).  All replica work is seeded per
/// replica, so the result is identical for every worker count; workers == 0
/// means hardware concurrency.
CriterionResult run_criterion(int id, std::uint64_t seed, int workers);

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<CriterionResult> criteria;
    std::string report; // deterministic text, byte-stable across worker counts
};

/// Criterion ids in a named suite: "specfun", "oracle-small", "limit",
/// "families", or "all".
std::vector<int> suite_criteria(const std::string& name);

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int workers);

/// Deterministic JSON rendering of a suite result.
std::string suite_json(const SuiteResult& suite);

} // namespace kcut::verify
