#include "qalign/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "qalign/errors.hpp"

namespace qalign {

namespace {

// Inputs may drift past their domain by floating-point noise; past 1e-12 it
// is an upstream bug and must surface, not be clamped away.
double checked_clamp01(double x, const char* what) {
    if (!std::isfinite(x) || x < -1e-12 || x > 1.0 + 1e-12)
        throw invalid_input_error(std::string(what) + " outside [0, 1]");
    return std::clamp(x, 0.0, 1.0);
}

}  // namespace

double binary_entropy(double x) {
    x = checked_clamp01(x, "binary_entropy argument");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double dn_from_overlap(double g) {
    g = checked_clamp01(g, "overlap");
    return std::sqrt(binary_entropy(0.5 * (1.0 + g)));
}

double bures_from_fidelity(double f) {
    f = checked_clamp01(f, "fidelity");
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(f))));
}

double bures_angle_from_fidelity(double f) {
    f = checked_clamp01(f, "fidelity");
    return std::acos(lin::clamp_unit(std::sqrt(f)));
}

double root_infidelity_from_fidelity(double f) {
    f = checked_clamp01(f, "fidelity");
    return std::sqrt(std::max(0.0, 1.0 - f));
}

MetricReport metric_report(const BlochVector& r, const BlochVector& s) {
    const ProcrustesResult pr = optimal_overlap(r, s);

    MetricReport rep;
    rep.g_star = pr.g_star;
    rep.fidelity = pr.g_star * pr.g_star;
    rep.d_n = dn_from_overlap(pr.g_star);
    rep.bures = bures_from_fidelity(rep.fidelity);
    rep.bures_angle = bures_angle_from_fidelity(rep.fidelity);
    rep.root_infidelity = root_infidelity_from_fidelity(rep.fidelity);
    rep.theta = pr.theta;
    rep.degenerate = pr.degenerate;

    // Independent route: the Uhlmann fidelity of the density matrices.
    // Disagreement means the solver went wrong somewhere.  The comparison is
    // made at the fidelity level, where it is well conditioned at both ends;
    // d_n and g have unbounded derivatives at coincident and at orthogonal
    // states, so thresholds there would trip on roundoff alone.
    const double f_spectral = uhlmann_fidelity(density_from_bloch(r), density_from_bloch(s));
    if (std::abs(f_spectral - rep.fidelity) > 1e-9)
        throw consistency_error("metric_report: Procrustes and fidelity routes disagree");
    return rep;
}

}  // namespace qalign
