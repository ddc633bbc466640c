#include "qalign/linalg3.hpp"

#include <algorithm>
#include <cmath>

#include "qalign/errors.hpp"

namespace qalign::lin {

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return c;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int k = 0; k < 9; ++k) c.a[static_cast<std::size_t>(k)] =
        a.a[static_cast<std::size_t>(k)] + b.a[static_cast<std::size_t>(k)];
    return c;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int k = 0; k < 9; ++k) c.a[static_cast<std::size_t>(k)] =
        a.a[static_cast<std::size_t>(k)] - b.a[static_cast<std::size_t>(k)];
    return c;
}

Mat3 operator*(double s, const Mat3& a) {
    Mat3 c;
    for (int k = 0; k < 9; ++k) c.a[static_cast<std::size_t>(k)] = s * a.a[static_cast<std::size_t>(k)];
    return c;
}

Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
            m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

Mat3 transpose(const Mat3& m) {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = m(j, i);
    return t;
}

double det(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double trace(const Mat3& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

Mat3 outer(const Vec3& a, const Vec3& b) {
    return {{a.x * b.x, a.x * b.y, a.x * b.z,
             a.y * b.x, a.y * b.y, a.y * b.z,
             a.z * b.x, a.z * b.y, a.z * b.z}};
}

double max_abs(const Mat3& m) {
    double r = 0.0;
    for (double e : m.a) r = std::max(r, std::abs(e));
    return r;
}

bool is_finite(const Mat3& m) {
    for (double e : m.a)
        if (!std::isfinite(e)) return false;
    return true;
}

Mat3 skew(const Vec3& v) {
    return {{0.0, -v.z, v.y,
             v.z, 0.0, -v.x,
             -v.y, v.x, 0.0}};
}

double orthogonality_defect(const Mat3& m) {
    return max_abs(transpose(m) * m - Mat3::identity());
}

bool is_rotation(const Mat3& m, double tol) {
    return is_finite(m) && orthogonality_defect(m) <= tol && std::abs(det(m) - 1.0) <= tol;
}

namespace {

Vec3 column(const Mat3& m, int j) { return {m(0, j), m(1, j), m(2, j)}; }

void set_column(Mat3& m, int j, const Vec3& c) {
    m(0, j) = c.x;
    m(1, j) = c.y;
    m(2, j) = c.z;
}

// Norm of a column with a single nonzero entry is that entry exactly;
// sqrt(x*x) can be an ulp off, which matters because axis-aligned inputs
// must reproduce exact permutation factors (and an exactly-identity optimal
// rotation downstream).
double column_norm(const Vec3& c, int* single_index) {
    *single_index = -1;
    int nonzero = 0;
    const double comps[3] = {c.x, c.y, c.z};
    for (int i = 0; i < 3; ++i)
        if (comps[i] != 0.0) {
            ++nonzero;
            *single_index = i;
        }
    if (nonzero == 1) return std::abs(comps[*single_index]);
    *single_index = -1;
    return norm(c);
}

// Fill the columns not marked set with unit vectors orthogonal to the rest.
// Candidates are scanned in fixed order for determinism.
void complete_orthonormal(Mat3& u, std::array<bool, 3>& set_flags) {
    const Vec3 candidates[3] = {x_axis(), y_axis(), z_axis()};
    for (int j = 0; j < 3; ++j) {
        if (set_flags[j]) continue;
        for (const Vec3& cand : candidates) {
            Vec3 r = cand;
            for (int k = 0; k < 3; ++k) {
                if (!set_flags[k]) continue;
                const Vec3 ck = column(u, k);
                r = r - dot(ck, r) * ck;
            }
            const double rn = norm(r);
            if (rn > 0.5) {
                set_column(u, j, (1.0 / rn) * r);
                set_flags[j] = true;
                break;
            }
        }
    }
}

}  // namespace

Svd3 svd3(const Mat3& m) {
    if (!is_finite(m)) throw invalid_input_error("svd3: non-finite entry");

    // One-sided Jacobi: orthogonalize the columns of w = m * (accumulated v),
    // so m = w v^T holds throughout and at convergence w = u diag(sigma).
    Mat3 w = m;
    Mat3 v = Mat3::identity();
    constexpr int kMaxSweeps = 30;
    constexpr double kPairTol = 1e-15;  // relative column-orthogonality target

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < 3; ++i) {
                    app += w(i, p) * w(i, p);
                    aqq += w(i, q) * w(i, q);
                    apq += w(i, p) * w(i, q);
                }
                if (std::abs(apq) <= kPairTol * std::sqrt(app * aqq)) continue;
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int i = 0; i < 3; ++i) {
                    const double wp = w(i, p), wq = w(i, q);
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                    const double vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::array<double, 3> colnorm{};
    std::array<int, 3> single{};
    for (int j = 0; j < 3; ++j)
        colnorm[static_cast<std::size_t>(j)] =
            column_norm(column(w, j), &single[static_cast<std::size_t>(j)]);

    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return colnorm[static_cast<std::size_t>(a)] > colnorm[static_cast<std::size_t>(b)];
    });

    Svd3 out;
    out.u = Mat3::zero();
    out.v = Mat3::zero();
    for (int j = 0; j < 3; ++j) {
        out.sigma[static_cast<std::size_t>(j)] = colnorm[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        set_column(out.v, j, column(v, idx[static_cast<std::size_t>(j)]));
    }

    // Columns with negligible singular value cannot be normalized reliably;
    // rebuild them so u stays orthogonal.
    const double tiny = 5e-14 * std::max(out.sigma[0], 1e-300);
    std::array<bool, 3> good{};
    for (int j = 0; j < 3; ++j) {
        const double sj = out.sigma[static_cast<std::size_t>(j)];
        const int src = idx[static_cast<std::size_t>(j)];
        good[static_cast<std::size_t>(j)] = sj > tiny;
        if (!good[static_cast<std::size_t>(j)]) continue;
        const int k = single[static_cast<std::size_t>(src)];
        if (k >= 0) {
            Vec3 unit{};
            const double entry = w(k, src);
            (k == 0 ? unit.x : (k == 1 ? unit.y : unit.z)) = entry > 0.0 ? 1.0 : -1.0;
            set_column(out.u, j, unit);
        } else {
            set_column(out.u, j, (1.0 / sj) * column(w, src));
        }
    }
    complete_orthonormal(out.u, good);

    // Sign convention: largest-magnitude component of each left vector is
    // nonnegative; flips are applied to u and v together.
    for (int j = 0; j < 3; ++j) {
        int kmax = 0;
        for (int k = 1; k < 3; ++k)
            if (std::abs(out.u(k, j)) > std::abs(out.u(kmax, j))) kmax = k;
        if (out.u(kmax, j) < 0.0) {
            for (int k = 0; k < 3; ++k) {
                out.u(k, j) = -out.u(k, j);
                out.v(k, j) = -out.v(k, j);
            }
        }
    }
    return out;
}

Rotation3 rotation_from_axis_angle(const AxisAngle& aa) {
    if (!is_finite(aa.axis) || !std::isfinite(aa.angle))
        throw invalid_input_error("rotation_from_axis_angle: non-finite input");
    if (aa.angle == 0.0) return {};
    if (std::abs(norm(aa.axis) - 1.0) > 1e-9)
        throw invalid_input_error("rotation_from_axis_angle: axis must be unit length when angle is nonzero");
    const Mat3 k = skew(aa.axis);
    const Mat3 r = Mat3::identity() + std::sin(aa.angle) * k + (1.0 - std::cos(aa.angle)) * (k * k);
    return {r};
}

AxisAngle axis_angle_from_rotation(const Rotation3& s) {
    if (!is_rotation(s.m, 1e-9))
        throw invalid_input_error("axis_angle_from_rotation: input is not a proper rotation");
    const double angle = std::acos(clamp_unit((trace(s.m) - 1.0) / 2.0));
    if (angle < 1e-12) return {z_axis(), angle};

    constexpr double kPi = 3.14159265358979323846;
    if (kPi - angle < 1e-7) {
        // Half turn: (s + I)/2 = u u^T, so the strongest column is the axis.
        const Mat3 b = 0.5 * (s.m + Mat3::identity());
        int jmax = 0;
        for (int j = 1; j < 3; ++j)
            if (b(j, j) > b(jmax, jmax)) jmax = j;
        Vec3 axis = column(b, jmax);
        axis = (1.0 / norm(axis)) * axis;
        int kmax = 0;
        const double comps[3] = {axis.x, axis.y, axis.z};
        for (int k = 1; k < 3; ++k)
            if (std::abs(comps[k]) > std::abs(comps[kmax])) kmax = k;
        if (comps[kmax] < 0.0) axis = -axis;
        return {axis, angle};
    }

    Vec3 axis{s.m(2, 1) - s.m(1, 2), s.m(0, 2) - s.m(2, 0), s.m(1, 0) - s.m(0, 1)};
    const double n = norm(axis);
    // A symmetric matrix away from the half turn is the identity up to
    // roundoff; its trace can still sit a hair below 3, so fall back to the
    // small-angle convention rather than dividing by zero.
    if (n == 0.0) return {z_axis(), angle};
    axis = (1.0 / n) * axis;
    return {axis, angle};
}

Rotation3 minimal_rotation_to(const Vec3& n) {
    if (!is_finite(n)) throw invalid_input_error("minimal_rotation_to: non-finite input");
    if (std::abs(norm(n) - 1.0) > 1e-9)
        throw invalid_input_error("minimal_rotation_to: direction must be unit length");
    if (1.0 + n.z < 1e-12) return {Mat3::diagonal(1.0, -1.0, -1.0)};  // n = -z convention
    const double c2 = n.x * n.x + n.y * n.y;
    if (c2 < 1e-32) return {};  // n = +z
    const double inv = 1.0 / std::sqrt(c2);
    const Vec3 axis{-n.y * inv, n.x * inv, 0.0};  // z x n, normalized
    return rotation_from_axis_angle({axis, std::acos(clamp_unit(n.z))});
}

}  // namespace qalign::lin
