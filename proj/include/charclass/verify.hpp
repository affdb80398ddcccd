#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charclass/ring.hpp"

namespace charclass {

struct SuiteResult {
    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::string counterexample;  // first failure, empty otherwise

    bool passed() const { return failed == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    long long samples = 10000;       // trials per randomized suite
    int degree_cap = kDefaultCap;    // > 2 adds higher-degree cross-checks
};

// Runs every module property suite deterministically; same seed, same
// counterexamples.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

}  // namespace charclass
