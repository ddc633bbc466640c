#pragma once

#include <array>

#include "qalign/linalg3.hpp"
#include "qalign/purification.hpp"
#include "qalign/qstate.hpp"

namespace qalign {

// 2x2 unitary with det = +1 acting on the ancilla; realizes the rotation it
// was lifted from through u^dagger (v.sigma) u = (S v).sigma.
struct SU2Lift {
    Mat2c u = Mat2c::identity();
};

struct ProcrustesSolution {
    lin::Rotation3 s_star{};
    double max_trace = 0.0;
};

// Everything the alignment solve produces for a state pair.
struct ProcrustesResult {
    lin::Rotation3 s_star{};                   // optimal ancilla rotation
    lin::Mat3 k{};                             // the trace-objective matrix
    std::array<double, 3> singular_values{};   // nonincreasing
    double max_trace = 0.0;                    // Tr(K S*)
    double g_star = 1.0;                       // maximal purification overlap
    double theta = 0.0;                        // misalignment angle, [0, pi]
    lin::Vec3 axis = lin::z_axis();            // rotation axis of s_star (z when theta ~ 0)
    Mat2c u_star = Mat2c::identity();          // SU(2) lift of s_star
    bool degenerate = false;                   // sigma_2 - sigma_3 < 1e-9
};

// Frame rotations used to build the gauge for a state pair.  A zero-radius
// state inherits the partner's frame (z if both vanish).  Collinear pairs --
// parallel or antiparallel -- share one frame, which is what makes commuting
// states come out with an exactly diagonal objective and a trivial optimal
// rotation, matching the closed-form treatment of that family.
struct GaugeFrames {
    lin::Rotation3 o_r;
    lin::Rotation3 o_s;
    bool shared = false;  // one frame serves both states
};

GaugeFrames gauge_frames(const BlochVector& r, const BlochVector& s);

// K = D_r R_rs D_s + |r||s| z z^T with R_rs = O(n_r)^T O(n_s).
lin::Mat3 procrustes_matrix(const BlochVector& r, const BlochVector& s);

// Same matrix from the Fano data, K = A_r^T A_s + gamma_r delta_s^T; kept as
// a cross-check of the gauge formula.
lin::Mat3 procrustes_matrix_fano(const BlochVector& r, const BlochVector& s);

// max over proper rotations of Tr(K S): with K = U Sigma V^T the optimum is
// S* = V Lambda U^T, Lambda = diag(1, 1, det(V U^T)), attaining
// sigma_1 + sigma_2 + sgn(det(V U^T)) sigma_3.
ProcrustesSolution procrustes_solve(const lin::Mat3& k);

// SU(2) lift of a rotation given in axis-angle form.  Returns the identity
// for angle 0 and -i u.sigma for angle pi.
SU2Lift lift_su2(const lin::AxisAngle& aa);

// SU(2) lift taken directly from the rotation matrix (pivoted quaternion
// extraction).  Unlike the axis-angle route this stays accurate to roundoff
// arbitrarily close to the half turn, where the trace-based angle cannot be
// recovered to better than ~1e-8.
SU2Lift lift_su2(const lin::Rotation3& s);

// Full alignment solve: canonical gauges, K, SVD, S*, aligned data, overlap,
// angle, axis and ancilla unitary.
ProcrustesResult optimal_overlap(const BlochVector& r, const BlochVector& s);

// Rotation angle of S* in the canonical gauge; zero whenever the two Bloch
// vectors are parallel (including either being zero).
double misalignment_angle(const BlochVector& r, const BlochVector& s);

}  // namespace qalign
