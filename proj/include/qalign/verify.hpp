#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qalign {

// Outcome of one seeded invariant suite.
struct VerifyResult {
    std::string suite;
    std::size_t samples = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Suites: fidelity-consistency, metric-axioms, purity-constraints,
// procrustes-optimality, channel-closed-forms, su2-lift.
std::vector<std::string> verify_suite_names();

VerifyResult run_verify_suite(const std::string& name, std::size_t samples, std::uint64_t seed);

}  // namespace qalign
