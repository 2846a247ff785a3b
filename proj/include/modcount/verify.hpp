#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modcount/arith.hpp"

namespace modcount {

struct CheckResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::string first_counterexample; // empty when clean

    bool passed() const { return failures == 0; }
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::int64_t total_cases() const;
    std::int64_t total_failures() const;
};

/// Runs the oracle-equivalence sweep for one suite ("arith", "congruence",
/// "vt", "necklace") or "all". max_n bounds the parameter grid and must stay
/// within the oracle caps: a sweep that would push an enumeration past its
/// cap propagates the CapacityError. Throws std::invalid_argument for an
/// unknown suite name.
VerifyReport run_suite(ArithContext &ctx, const std::string &suite,
                       std::int64_t max_n);

} // namespace modcount
