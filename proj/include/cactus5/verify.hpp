#pragma once

// Self-check engine: each acceptance-level invariant of the library runs as
// one named check producing a pass flag and a one-line detail. The CLI
// `verify` subcommand prints one line per check and exits nonzero when any
// check fails.

#include <string>
#include <vector>

#include "cactus5/numeric.hpp"

namespace cactus5 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

inline constexpr unsigned long long kDefaultSampleSeed = 42;

// Runs every check. sample_count polynomials are drawn for the sampling
// check; mesh and tolerances feed the numeric checks.
VerifyReport run_verification(int sample_count = 100, unsigned long long seed = kDefaultSampleSeed,
                              const MeshControl& mesh = {}, const Tolerances& tol = {});

std::string verify_report_to_text(const VerifyReport& report);

} // namespace cactus5
