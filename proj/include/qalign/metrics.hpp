#pragma once

#include "qalign/procrustes.hpp"
#include "qalign/qstate.hpp"

namespace qalign {

// Scalar distinguishability measures of a state pair, all functions of the
// maximal purification overlap, plus the misalignment angle of the solve
// that produced it.
struct MetricReport {
    double g_star = 1.0;          // maximal purification overlap
    double fidelity = 1.0;        // g_star^2
    double d_n = 0.0;             // sqrt(h2((1+g)/2)), in [0, 1]
    double bures = 0.0;           // sqrt(2 (1 - sqrt(F))), in [0, sqrt(2)]
    double bures_angle = 0.0;     // arccos(sqrt(F)), in [0, pi/2]
    double root_infidelity = 0.0; // sqrt(1 - F), in [0, 1]
    double theta = 0.0;           // misalignment angle, [0, pi]
    bool degenerate = false;
};

// -x log2 x - (1-x) log2 (1-x) with h2(0) = h2(1) = 0.
double binary_entropy(double x);

// sqrt(h2((1+g)/2)); monotone decreasing in g.
double dn_from_overlap(double g);

double bures_from_fidelity(double f);
double bures_angle_from_fidelity(double f);
double root_infidelity_from_fidelity(double f);

// One alignment solve filling every field; the d_n value is cross-checked
// against the spectral-fidelity route before being returned.
MetricReport metric_report(const BlochVector& r, const BlochVector& s);

}  // namespace qalign
