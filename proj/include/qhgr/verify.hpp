#pragma once

// Full self-check suite: golden tables, cross-route product equality,
// structural identities, and the independent oracles, each reported as one
// named criterion with a pass flag and wall time.

#include "qhgr/base.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qhgr {

struct VerifyOptions {
    // Clamps every enumeration sweep from above; each suite's own depth cap
    // (5, 6 or 7 depending on the suite) is the default, so 7 means "run
    // everything at full depth".  Fixed worked examples run regardless.
    i64 max_n = 7;
    u64 seed = 20260817;
    i64 samples_per_m = 50;  // sampled pairs per m in the n = 6 sweep
};

struct CriterionResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;  // volume summary, or the first counterexample
};

// on_result, when given, is called with each criterion as it finishes.
std::vector<CriterionResult> run_acceptance(
    const VerifyOptions& opts = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

// PETERSON_VERIFY_DEPTH, when set to a positive integer, overrides fallback.
i64 verify_depth_from_env(i64 fallback);

}  // namespace qhgr
