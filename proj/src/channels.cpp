#include "qalign/channels.hpp"

#include <algorithm>
#include <cmath>

#include "qalign/errors.hpp"
#include "qalign/sampling.hpp"

namespace qalign {

using lin::Mat3;
using lin::Vec3;

namespace {

void require_range(double x, double lo, double hi, const char* what) {
    if (!std::isfinite(x) || x < lo || x > hi)
        throw invalid_parameter_error(std::string(what) + " out of range");
}

}  // namespace

AffineChannel depolarizing(double p) {
    require_range(p, 0.0, 1.0, "depolarizing p");
    return {(1.0 - p) * Mat3::identity(), {}, "dep"};
}

AffineChannel bit_flip(double p) {
    require_range(p, 0.0, 1.0, "bit-flip p");
    const double l = 1.0 - 2.0 * p;
    return {Mat3::diagonal(1.0, l, l), {}, "bf"};
}

AffineChannel phase_flip(double p) {
    require_range(p, 0.0, 1.0, "phase-flip p");
    const double l = 1.0 - 2.0 * p;
    return {Mat3::diagonal(l, l, 1.0), {}, "pf"};
}

AffineChannel diagonal_pauli(double lx, double ly, double lz) {
    require_range(lx, -1.0, 1.0, "pauli lx");
    require_range(ly, -1.0, 1.0, "pauli ly");
    require_range(lz, -1.0, 1.0, "pauli lz");
    return {Mat3::diagonal(lx, ly, lz), {}, "pauli"};
}

AffineChannel amplitude_damping(double gamma) {
    require_range(gamma, 0.0, 1.0, "amplitude-damping gamma");
    const double t = std::sqrt(1.0 - gamma);
    return {Mat3::diagonal(t, t, 1.0 - gamma), {0.0, 0.0, gamma}, "ad"};
}

AffineChannel imperfect_not(double p, double delta_alpha) {
    require_range(p, 0.0, 1.0, "imperfect-not p");
    if (!std::isfinite(delta_alpha)) throw invalid_parameter_error("imperfect-not da out of range");
    const double q = (1.0 - p) + p * std::cos(delta_alpha);
    const double s = p * std::sin(delta_alpha);
    Mat3 m = Mat3::zero();
    m(0, 0) = 1.0;
    m(1, 1) = -q;
    m(1, 2) = s;
    m(2, 1) = -s;
    m(2, 2) = -q;
    return {m, {}, "not"};
}

AffineChannel affine_channel(const Mat3& m, const Vec3& c, std::string label) {
    if (!lin::is_finite(m) || !lin::is_finite(c))
        throw invalid_parameter_error("affine channel has non-finite entries");
    return {m, c, std::move(label)};
}

KrausSet bit_flip_kraus(double p) {
    require_range(p, 0.0, 1.0, "bit-flip p");
    return {{cplx(std::sqrt(1.0 - p)) * Mat2c::identity(), cplx(std::sqrt(p)) * pauli_x()}};
}

KrausSet phase_flip_kraus(double p) {
    require_range(p, 0.0, 1.0, "phase-flip p");
    return {{cplx(std::sqrt(1.0 - p)) * Mat2c::identity(), cplx(std::sqrt(p)) * pauli_z()}};
}

KrausSet depolarizing_kraus(double p) {
    require_range(p, 0.0, 1.0, "depolarizing p");
    return {{cplx(std::sqrt(1.0 - 0.75 * p)) * Mat2c::identity(),
             cplx(std::sqrt(0.25 * p)) * pauli_x(),
             cplx(std::sqrt(0.25 * p)) * pauli_y(),
             cplx(std::sqrt(0.25 * p)) * pauli_z()}};
}

KrausSet amplitude_damping_kraus(double gamma) {
    require_range(gamma, 0.0, 1.0, "amplitude-damping gamma");
    Mat2c k0;
    k0(0, 0) = cplx(1.0);
    k0(1, 1) = cplx(std::sqrt(1.0 - gamma));
    Mat2c k1;
    k1(0, 1) = cplx(std::sqrt(gamma));
    return {{k0, k1}};
}

KrausSet imperfect_not_kraus(double p, double delta_alpha) {
    require_range(p, 0.0, 1.0, "imperfect-not p");
    const double half = 0.5 * (3.14159265358979323846 + delta_alpha);
    // exp(-i/2 (pi + da) sigma_x)
    Mat2c ud = cplx(std::cos(half)) * Mat2c::identity() + cplx(0.0, -std::sin(half)) * pauli_x();
    return {{cplx(std::sqrt(1.0 - p)) * pauli_x(), cplx(std::sqrt(p)) * ud}};
}

double kraus_completeness_defect(const KrausSet& ks) {
    Mat2c sum;
    for (const Mat2c& k : ks.ops) sum = sum + adjoint(k) * k;
    return max_abs_entry(sum - Mat2c::identity());
}

AffineChannel affine_from_kraus(const KrausSet& ks, std::string label) {
    if (ks.ops.empty()) throw invalid_kraus_error("empty Kraus set");
    if (kraus_completeness_defect(ks) > 1e-8)
        throw invalid_kraus_error("Kraus completeness relation violated");

    Mat3 m;
    Vec3 c;
    Mat2c unital_part;
    for (const Mat2c& k : ks.ops) unital_part = unital_part + k * adjoint(k);
    c.x = 0.5 * trace(pauli_x() * unital_part).real();
    c.y = 0.5 * trace(pauli_y() * unital_part).real();
    c.z = 0.5 * trace(pauli_z() * unital_part).real();
    for (int j = 0; j < 3; ++j) {
        Mat2c img;
        for (const Mat2c& k : ks.ops) img = img + k * pauli(j) * adjoint(k);
        for (int i = 0; i < 3; ++i) m(i, j) = 0.5 * trace(pauli(i) * img).real();
    }
    return {m, c, std::move(label)};
}

BlochVector apply(const AffineChannel& ch, const BlochVector& r) {
    validate_bloch(r);
    const BlochVector out{ch.m * r.v + ch.c};
    if (radius(out) > 1.0 + 1e-9)
        throw channel_validity_error("channel output left the Bloch ball (map is not a valid channel)");
    return out;
}

double ball_preservation_max_norm(const AffineChannel& ch, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = lin::norm(ch.m * Vec3{} + ch.c);
    for (int i = 0; i < samples; ++i) {
        lin::Vec3 v = sample_ball(rng);
        if (i % 4 == 0) v = sample_unit(rng);  // boundary states stress the map hardest
        worst = std::max(worst, lin::norm(ch.m * v + ch.c));
    }
    return worst;
}

double collinear_overlap(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || std::abs(a) > 1.0 + 1e-9 || std::abs(b) > 1.0 + 1e-9)
        throw invalid_parameter_error("collinear_overlap: radii must lie in [-1, 1]");
    const double pp = std::max(0.0, (1.0 + a) * (1.0 + b));
    const double mm = std::max(0.0, (1.0 - a) * (1.0 - b));
    return 0.5 * (std::sqrt(pp) + std::sqrt(mm));
}

double channel_overlap_closed_form(const std::string& family, double param, double r) {
    if (!std::isfinite(r) || std::abs(r) > 1.0 + 1e-9)
        throw invalid_parameter_error("channel_overlap_closed_form: radius out of range");
    double b;
    if (family == "dep") {
        require_range(param, 0.0, 1.0, "depolarizing p");
        b = (1.0 - param) * r;
    } else if (family == "bf" || family == "pf") {
        require_range(param, 0.0, 1.0, "flip probability");
        b = (1.0 - 2.0 * param) * r;
    } else if (family == "pauli") {
        require_range(param, -1.0, 1.0, "pauli lambda");
        b = param * r;
    } else if (family == "ad") {
        require_range(param, 0.0, 1.0, "amplitude-damping gamma");
        b = param + (1.0 - param) * r;
    } else {
        throw invalid_parameter_error("unknown closed-form family: " + family);
    }
    return collinear_overlap(r, b);
}

}  // namespace qalign
