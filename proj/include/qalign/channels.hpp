#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qalign/linalg3.hpp"
#include "qalign/qstate.hpp"

namespace qalign {

// Affine Bloch action of a CPTP qubit map: r -> m r + c.  Unital channels
// have c = 0.
struct AffineChannel {
    lin::Mat3 m = lin::Mat3::identity();
    lin::Vec3 c{};
    std::string label = "identity";
};

struct KrausSet {
    std::vector<Mat2c> ops;
};

// r -> (1-p) r
AffineChannel depolarizing(double p);
// diag(1, 1-2p, 1-2p)
AffineChannel bit_flip(double p);
// diag(1-2p, 1-2p, 1)
AffineChannel phase_flip(double p);
// diag(lx, ly, lz); |l_i| <= 1 enforced, complete positivity is not certified
AffineChannel diagonal_pauli(double lx, double ly, double lz);
// diag(sqrt(1-g), sqrt(1-g), 1-g), c = (0, 0, g)
AffineChannel amplitude_damping(double gamma);
// x row invariant, (y,z) block mixes -[(1-p)+p cos(da)] diagonal with
// +-p sin(da) off-diagonal
AffineChannel imperfect_not(double p, double delta_alpha);
// user-supplied affine action
AffineChannel affine_channel(const lin::Mat3& m, const lin::Vec3& c, std::string label = "affine");

// Kraus sets of the named channels, as listed in the operator-sum forms.
KrausSet bit_flip_kraus(double p);
KrausSet phase_flip_kraus(double p);
KrausSet depolarizing_kraus(double p);
KrausSet amplitude_damping_kraus(double gamma);
KrausSet imperfect_not_kraus(double p, double delta_alpha);

// Largest deviation of sum K^dagger K from the identity.
double kraus_completeness_defect(const KrausSet& ks);

// Pauli-transfer construction: M_ij = Tr(sigma_i sum_mu K sigma_j K^dagger)/2,
// c_i = Tr(sigma_i sum_mu K K^dagger)/2.
AffineChannel affine_from_kraus(const KrausSet& ks, std::string label = "kraus");

// m r + c; the output is checked to stay in the Bloch ball.
BlochVector apply(const AffineChannel& ch, const BlochVector& r);

// max ||m r + c|| over `samples` deterministic pseudo-random unit-ball inputs.
double ball_preservation_max_norm(const AffineChannel& ch, int samples = 1000,
                                  std::uint64_t seed = 1);

// [sqrt((1+a)(1+b)) + sqrt((1-a)(1-b))] / 2 for commuting states with signed
// radii a, b on a shared axis.
double collinear_overlap(double a, double b);

// Closed-form overlap for the symmetry-adapted families:
//   dep   : b = (1-p) r
//   bf    : b = (1-2p) r   (z-axis family)
//   pf    : b = (1-2p) r   (x-axis family)
//   pauli : b = lambda r   (axis-adapted family, param = lambda_i)
//   ad    : b = g + (1-g) r (z-axis family)
double channel_overlap_closed_form(const std::string& family, double param, double r);

}  // namespace qalign
