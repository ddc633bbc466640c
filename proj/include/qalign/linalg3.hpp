#pragma once

#include <array>
#include <cmath>

namespace qalign::lin {

// Fixed-size real 3-vector / 3x3-matrix kernel.  Everything here is a pure
// function on value types; no shared state, safe from any thread.

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

inline bool is_finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

inline Vec3 x_axis() { return {1.0, 0.0, 0.0}; }
inline Vec3 y_axis() { return {0.0, 1.0, 0.0}; }
inline Vec3 z_axis() { return {0.0, 0.0, 1.0}; }

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

    static Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
    static Mat3 zero() { return {}; }
    static Mat3 diagonal(double d0, double d1, double d2) {
        return {{d0, 0, 0, 0, d1, 0, 0, 0, d2}};
    }
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator*(double s, const Mat3& a);
Vec3 operator*(const Mat3& m, const Vec3& v);

Mat3 transpose(const Mat3& m);
double det(const Mat3& m);
double trace(const Mat3& m);
Mat3 outer(const Vec3& a, const Vec3& b);
double max_abs(const Mat3& m);
bool is_finite(const Mat3& m);

// [v]x, the skew matrix with [v]x w = v x w.
Mat3 skew(const Vec3& v);

// Largest |(m^T m - I)_ij|; zero for an orthogonal matrix.
double orthogonality_defect(const Mat3& m);
bool is_rotation(const Mat3& m, double tol);

inline double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

struct Svd3 {
    Mat3 u;                         // orthogonal, left singular vectors as columns
    std::array<double, 3> sigma{};  // nonincreasing, nonnegative
    Mat3 v;                         // orthogonal
};

struct Rotation3 {
    Mat3 m = Mat3::identity();
};

struct AxisAngle {
    Vec3 axis = z_axis();   // unit norm whenever angle > 0
    double angle = 0.0;     // radians, in [0, pi]
};

// Singular value decomposition m = u diag(sigma) v^T by cyclic one-sided
// Jacobi with fixed sweep order.  Deterministic: identical input gives
// bit-identical output.  Sign convention: each left singular vector's
// largest-magnitude component is nonnegative.
Svd3 svd3(const Mat3& m);

// Rodrigues: I + sin(t) [u]x + (1-cos(t)) [u]x^2.
Rotation3 rotation_from_axis_angle(const AxisAngle& aa);

// Inverse of the above.  angle = arccos(clamp((tr-1)/2)).  For angle < 1e-12
// the axis is z by convention; near pi the axis comes from the +1
// eigenvector, with the largest-magnitude component made positive;
// otherwise from the antisymmetric part.
AxisAngle axis_angle_from_rotation(const Rotation3& s);

// The rotation O with O z = n that moves z along the shortest arc; returns
// the identity for n = z and the half-turn about x for n = -z.
Rotation3 minimal_rotation_to(const Vec3& n);

}  // namespace qalign::lin
