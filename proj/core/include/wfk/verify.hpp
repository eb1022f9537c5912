#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wfk/params.hpp"

namespace wfk {

struct VerifyOptions {
    WeierstrassParams params = WeierstrassParams::make(0.5, 3);
    double tol = kDefaultTol;
    int grid_count = 10001;
    int samples = 2000;
    int trunc_order = 6;
    std::uint64_t seed = 0;
    int workers = 0;
    /// Test hook: flips the sign of one off-diagonal Gram entry inside the
    /// positive-semidefiniteness suite, which must then fail.
    bool inject_gram_sign_flip = false;
};

struct SuiteResult {
    std::string name;
    bool passed;
    std::string detail; // empty on success, first failure otherwise
};

/// Runs every module's invariant suite at desk scale with the given
/// parameters. Pure; safe to run concurrently.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

inline bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

} // namespace wfk
