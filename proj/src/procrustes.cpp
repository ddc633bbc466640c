#include "qalign/procrustes.hpp"

#include <algorithm>
#include <cmath>

#include "qalign/errors.hpp"

namespace qalign {

using lin::Mat3;
using lin::Vec3;

GaugeFrames gauge_frames(const BlochVector& r, const BlochVector& s) {
    const double rn = radius(r);
    const double sn = radius(s);
    GaugeFrames out;
    if (rn == 0.0 && sn == 0.0) {
        out.shared = true;
        return out;  // identity frames
    }
    const Vec3 nr = rn > 0.0 ? (1.0 / rn) * r.v : (1.0 / sn) * s.v;
    const Vec3 ns = sn > 0.0 ? (1.0 / sn) * s.v : nr;
    // Collinear directions (either orientation) share the frame of the first
    // state; this keeps commuting pairs exactly diagonal in gauge
    // coordinates.  The 1e-12 band also absorbs normalization jitter.
    if (rn == 0.0 || sn == 0.0 || lin::norm(lin::cross(nr, ns)) <= 1e-12) {
        out.shared = true;
        out.o_r = lin::minimal_rotation_to(rn > 0.0 ? nr : ns);
        out.o_s = out.o_r;
        return out;
    }
    out.o_r = lin::minimal_rotation_to(nr);
    out.o_s = lin::minimal_rotation_to(ns);
    return out;
}

namespace {

struct GaugePair {
    CanonicalGaugeData gr;
    CanonicalGaugeData gs;
    bool shared;
};

GaugePair build_gauges(const BlochVector& r, const BlochVector& s) {
    const GaugeFrames f = gauge_frames(r, s);
    GaugePair out;
    out.shared = f.shared;
    out.gr.alpha = std::sqrt(std::max(0.0, 1.0 - std::min(1.0, lin::norm2(r.v))));
    out.gs.alpha = std::sqrt(std::max(0.0, 1.0 - std::min(1.0, lin::norm2(s.v))));
    out.gr.d = Mat3::diagonal(out.gr.alpha, out.gr.alpha, -1.0);
    out.gs.d = Mat3::diagonal(out.gs.alpha, out.gs.alpha, -1.0);
    out.gr.o = f.o_r;
    out.gs.o = f.o_s;
    return out;
}

Mat3 objective_from_gauges(const GaugePair& g, const BlochVector& r, const BlochVector& s) {
    if (g.shared) {
        // Frames cancel and the ancilla vectors are exact multiples of z, so
        // the objective is diagonal to the last bit.
        const double orientation = lin::dot(r.v, s.v) < 0.0 ? -1.0 : 1.0;
        Mat3 k = g.gr.d * g.gs.d;
        k(2, 2) += orientation * radius(r) * radius(s);
        return k;
    }
    const Vec3 gamma = g.gr.d * (lin::transpose(g.gr.o.m) * r.v);
    const Vec3 delta = g.gs.d * (lin::transpose(g.gs.o.m) * s.v);
    const Mat3 rel = lin::transpose(g.gr.o.m) * g.gs.o.m;
    return g.gr.d * rel * g.gs.d + lin::outer(gamma, delta);
}

}  // namespace

Mat3 procrustes_matrix(const BlochVector& r, const BlochVector& s) {
    validate_bloch(r);
    validate_bloch(s);
    return objective_from_gauges(build_gauges(r, s), r, s);
}

Mat3 procrustes_matrix_fano(const BlochVector& r, const BlochVector& s) {
    validate_bloch(r);
    validate_bloch(s);
    const GaugePair g = build_gauges(r, s);
    const Mat3 ar = g.gr.o.m * g.gr.d;
    const Mat3 as = g.gs.o.m * g.gs.d;
    const Vec3 gamma = lin::transpose(ar) * r.v;
    const Vec3 delta = lin::transpose(as) * s.v;
    return lin::transpose(ar) * as + lin::outer(gamma, delta);
}

ProcrustesSolution procrustes_solve(const Mat3& k) {
    if (!lin::is_finite(k)) throw invalid_input_error("procrustes_solve: non-finite entry");
    const lin::Svd3 svd = lin::svd3(k);
    const double d = lin::det(svd.v) * lin::det(svd.u);
    const Mat3 lambda = Mat3::diagonal(1.0, 1.0, d >= 0.0 ? 1.0 : -1.0);
    ProcrustesSolution out;
    out.s_star = {svd.v * lambda * lin::transpose(svd.u)};
    out.max_trace = lin::trace(k * out.s_star.m);
    return out;
}

SU2Lift lift_su2(const lin::AxisAngle& aa) {
    if (!lin::is_finite(aa.axis) || !std::isfinite(aa.angle))
        throw invalid_input_error("lift_su2: non-finite input");
    if (aa.angle != 0.0 && std::abs(lin::norm(aa.axis) - 1.0) > 1e-9)
        throw invalid_input_error("lift_su2: axis must be unit length");

    constexpr double kPi = 3.14159265358979323846;
    const double half = 0.5 * aa.angle;
    const double c = std::cos(half);
    const double s = std::sin(half);
    // u = cos(t/2) I + i sin(t/2) u.sigma satisfies
    // u^dagger (v.sigma) u = (R(u, t) v).sigma; the overall sign is flipped
    // at the half-turn so the angle-pi case comes out as -i u.sigma.
    const double sign = (aa.angle > kPi - 1e-7) ? -1.0 : 1.0;
    Mat2c u;
    u(0, 0) = sign * cplx(c, s * aa.axis.z);
    u(0, 1) = sign * cplx(s * aa.axis.y, s * aa.axis.x);
    u(1, 0) = sign * cplx(-s * aa.axis.y, s * aa.axis.x);
    u(1, 1) = sign * cplx(c, -s * aa.axis.z);
    return {u};
}

SU2Lift lift_su2(const lin::Rotation3& s) {
    if (!lin::is_rotation(s.m, 1e-9))
        throw invalid_input_error("lift_su2: input is not a proper rotation");
    const Mat3& m = s.m;
    const double tr = lin::trace(m);

    // Shepperd extraction: pivot on the largest quaternion component so every
    // division is by a quantity of order one.
    double w, x, y, z;
    const double d0 = m(0, 0), d1 = m(1, 1), d2 = m(2, 2);
    if (tr >= d0 && tr >= d1 && tr >= d2) {
        w = 0.5 * std::sqrt(std::max(0.0, 1.0 + tr));
        x = (m(2, 1) - m(1, 2)) / (4.0 * w);
        y = (m(0, 2) - m(2, 0)) / (4.0 * w);
        z = (m(1, 0) - m(0, 1)) / (4.0 * w);
    } else if (d0 >= d1 && d0 >= d2) {
        x = 0.5 * std::sqrt(std::max(0.0, 1.0 + 2.0 * d0 - tr));
        w = (m(2, 1) - m(1, 2)) / (4.0 * x);
        y = (m(0, 1) + m(1, 0)) / (4.0 * x);
        z = (m(0, 2) + m(2, 0)) / (4.0 * x);
    } else if (d1 >= d2) {
        y = 0.5 * std::sqrt(std::max(0.0, 1.0 + 2.0 * d1 - tr));
        w = (m(0, 2) - m(2, 0)) / (4.0 * y);
        x = (m(0, 1) + m(1, 0)) / (4.0 * y);
        z = (m(1, 2) + m(2, 1)) / (4.0 * y);
    } else {
        z = 0.5 * std::sqrt(std::max(0.0, 1.0 + 2.0 * d2 - tr));
        w = (m(1, 0) - m(0, 1)) / (4.0 * z);
        x = (m(0, 2) + m(2, 0)) / (4.0 * z);
        y = (m(1, 2) + m(2, 1)) / (4.0 * z);
    }
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n;
    x /= n;
    y /= n;
    z /= n;

    // Sign convention of the double cover: w >= 0 away from the half turn
    // (so the identity lifts to the identity); at the half turn pick the
    // sheet that matches -i u.sigma with the reported axis.
    constexpr double kPi = 3.14159265358979323846;
    const double angle = std::acos(lin::clamp_unit(0.5 * (tr - 1.0)));
    bool flip;
    if (angle > kPi - 1e-7) {
        const lin::AxisAngle aa = lin::axis_angle_from_rotation(s);
        flip = x * aa.axis.x + y * aa.axis.y + z * aa.axis.z > 0.0;
    } else {
        flip = w < 0.0;
    }
    if (flip) {
        w = -w;
        x = -x;
        y = -y;
        z = -z;
    }

    Mat2c u;
    u(0, 0) = cplx(w, z);
    u(0, 1) = cplx(y, x);
    u(1, 0) = cplx(-y, x);
    u(1, 1) = cplx(w, -z);
    return {u};
}

ProcrustesResult optimal_overlap(const BlochVector& r, const BlochVector& s) {
    validate_bloch(r);
    validate_bloch(s);

    const GaugePair g = build_gauges(r, s);
    const Mat3 ar = g.gr.o.m * g.gr.d;
    const Mat3 as = g.gs.o.m * g.gs.d;
    const Vec3 gamma = lin::transpose(ar) * r.v;
    const Vec3 delta = lin::transpose(as) * s.v;

    ProcrustesResult out;
    out.k = objective_from_gauges(g, r, s);

    const lin::Svd3 svd = lin::svd3(out.k);
    out.singular_values = svd.sigma;
    out.degenerate = (svd.sigma[1] - svd.sigma[2]) < 1e-9;
    const double d = lin::det(svd.v) * lin::det(svd.u);
    const Mat3 lambda = Mat3::diagonal(1.0, 1.0, d >= 0.0 ? 1.0 : -1.0);
    out.s_star = {svd.v * lambda * lin::transpose(svd.u)};
    out.max_trace = lin::trace(out.k * out.s_star.m);

    // Aligned purification data of the second state.
    const Mat3 b_star = as * out.s_star.m;
    const Vec3 delta_star = lin::transpose(out.s_star.m) * delta;
    const double g2 = 0.25 * (1.0 + lin::dot(r.v, s.v) + lin::dot(gamma, delta_star) +
                              lin::trace(lin::transpose(ar) * b_star));
    out.g_star = std::sqrt(std::clamp(g2, 0.0, 1.0));

    const lin::AxisAngle aa = lin::axis_angle_from_rotation(out.s_star);
    out.theta = aa.angle;
    out.axis = aa.axis;
    out.u_star = lift_su2(out.s_star).u;
    return out;
}

double misalignment_angle(const BlochVector& r, const BlochVector& s) {
    return optimal_overlap(r, s).theta;
}

}  // namespace qalign
