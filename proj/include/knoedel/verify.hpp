#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knoedel {

struct VerifyOptions {
    std::size_t order = 32;           ///< series truncation and Girard-Waring bound
    std::uint64_t max_steps = 30;     ///< largest step count for the DP grids
    /// Negative control: perturb the double-large coefficient evaluator so the
    /// theorem grid must fail.
    bool inject_fault = false;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::size_t checks = 0;
    std::string first_failure;  ///< empty when passed
};

/// Runs every identity suite (kernel identities, series reversion, the
/// coefficient grids against the DP, Girard-Waring, structural laws).
std::vector<SuiteResult> run_verification(const VerifyOptions& options = {});

inline bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace knoedel
