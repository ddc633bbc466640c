#pragma once

#include "qalign/linalg3.hpp"
#include "qalign/qstate.hpp"

namespace qalign {

// Fano data (r, gamma, A) of a two-qubit purification of the state with
// Bloch vector r.  Purity ties the three together:
//   A A^T    = (1 - r^2) I + r r^T
//   A^T A    = (1 - g^2) I + gamma gamma^T
//   det A    = r^2 - 1
//   gamma    = A^T r
//   |gamma|  = |r|
struct FanoPurification {
    BlochVector r{};
    lin::Vec3 gamma{};
    lin::Mat3 a = lin::Mat3::diagonal(1.0, 1.0, -1.0);
};

// Frame data of the reference gauge: A = o d with d = diag(alpha, alpha, -1)
// and alpha = sqrt(1 - r^2).
struct CanonicalGaugeData {
    lin::Rotation3 o{};
    lin::Mat3 d = lin::Mat3::diagonal(1.0, 1.0, -1.0);
    double alpha = 1.0;
};

// Largest residual across the five purity constraints.
double purity_residual(const FanoPurification& p);

// Throws invalid_purification_error when purity_residual exceeds tol.
void validate_purification(const FanoPurification& p, double tol = 1e-8);

// Gauge frame for a state of radius |r| whose direction is given explicitly.
// The direction argument is what removes the ambiguity at r = 0: pass the
// partner state's direction (or z) and the frame stays deterministic.
CanonicalGaugeData canonical_gauge(double radius, const lin::Vec3& direction);

// Reference purification A = o(n_r) diag(alpha, alpha, -1), gamma = A^T r.
// For r = 0 the frame rotation is the identity.
FanoPurification canonical_purification(const BlochVector& r);

// (r, S^T gamma, A S): the purification reached from p by the ancilla
// rotation s; the reduced system state is unchanged.
FanoPurification rotate_purification(const FanoPurification& p, const lin::Rotation3& s);

// |<Psi_p|Psi_q>|^2 = (1/4) [1 + r.s + gamma.delta + Tr(A^T B)], in [0, 1].
double fano_overlap_squared(const FanoPurification& p, const FanoPurification& q);

}  // namespace qalign
