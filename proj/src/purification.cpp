#include "qalign/purification.hpp"

#include <algorithm>
#include <cmath>

#include "qalign/errors.hpp"

namespace qalign {

using lin::Mat3;
using lin::Vec3;

double purity_residual(const FanoPurification& p) {
    const double r2 = lin::norm2(p.r.v);
    const double g2 = lin::norm2(p.gamma);
    const Mat3 aat = p.a * lin::transpose(p.a);
    const Mat3 ata = lin::transpose(p.a) * p.a;
    const Mat3 want_aat = (1.0 - r2) * Mat3::identity() + lin::outer(p.r.v, p.r.v);
    const Mat3 want_ata = (1.0 - g2) * Mat3::identity() + lin::outer(p.gamma, p.gamma);

    double res = lin::max_abs(aat - want_aat);
    res = std::max(res, lin::max_abs(ata - want_ata));
    res = std::max(res, std::abs(lin::det(p.a) - (r2 - 1.0)));
    const Vec3 gw = lin::transpose(p.a) * p.r.v;
    res = std::max(res, lin::norm(gw - p.gamma));
    res = std::max(res, std::abs(std::sqrt(g2) - std::sqrt(r2)));
    return res;
}

void validate_purification(const FanoPurification& p, double tol) {
    if (!lin::is_finite(p.r.v) || !lin::is_finite(p.gamma) || !lin::is_finite(p.a))
        throw invalid_purification_error("purification has non-finite entries");
    if (purity_residual(p) > tol)
        throw invalid_purification_error("purity constraints violated");
}

CanonicalGaugeData canonical_gauge(double radius, const Vec3& direction) {
    if (radius < 0.0 || radius > 1.0 + 1e-9)
        throw invalid_state_error("canonical_gauge: radius outside [0, 1]");
    CanonicalGaugeData g;
    g.alpha = std::sqrt(std::max(0.0, 1.0 - radius * radius));
    g.d = Mat3::diagonal(g.alpha, g.alpha, -1.0);
    g.o = (radius > 0.0) ? lin::minimal_rotation_to(direction) : lin::Rotation3{};
    return g;
}

FanoPurification canonical_purification(const BlochVector& r) {
    validate_bloch(r);
    const double rn = radius(r);
    const Vec3 dir = rn > 0.0 ? (1.0 / rn) * r.v : lin::z_axis();
    const CanonicalGaugeData g = canonical_gauge(rn, dir);
    FanoPurification p;
    p.r = r;
    p.a = g.o.m * g.d;
    p.gamma = lin::transpose(p.a) * r.v;  // equals -|r| z in this gauge
    return p;
}

FanoPurification rotate_purification(const FanoPurification& p, const lin::Rotation3& s) {
    validate_purification(p);
    if (!lin::is_rotation(s.m, 1e-9))
        throw invalid_input_error("rotate_purification: not a proper rotation");
    FanoPurification out;
    out.r = p.r;
    out.gamma = lin::transpose(s.m) * p.gamma;
    out.a = p.a * s.m;
    return out;
}

double fano_overlap_squared(const FanoPurification& p, const FanoPurification& q) {
    validate_purification(p);
    validate_purification(q);
    const double t = 1.0 + lin::dot(p.r.v, q.r.v) + lin::dot(p.gamma, q.gamma) +
                     lin::trace(lin::transpose(p.a) * q.a);
    return std::clamp(0.25 * t, 0.0, 1.0);
}

}  // namespace qalign
