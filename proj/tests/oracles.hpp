#pragma once

// Test-only reference computations, independent of the library's production
// paths: closed-form symmetric eigenvalues via the characteristic polynomial,
// a generic real-symmetric Jacobi eigensolver used to diagonalize Hermitian
// matrices through their real embedding, and a 3x3 inverse.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "qalign/linalg3.hpp"
#include "qalign/qstate.hpp"

namespace oracles {

// Eigenvalues of a symmetric 3x3 matrix from the characteristic polynomial
// (trigonometric form), in nonincreasing order.
inline std::array<double, 3> eig3_symmetric(const qalign::lin::Mat3& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    if (p1 == 0.0) {
        std::array<double, 3> e{a(0, 0), a(1, 1), a(2, 2)};
        std::sort(e.begin(), e.end(), std::greater<double>());
        return e;
    }
    const double q = qalign::lin::trace(a) / 3.0;
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    qalign::lin::Mat3 b = (1.0 / p) * (a - q * qalign::lin::Mat3::identity());
    const double r = qalign::lin::clamp_unit(0.5 * qalign::lin::det(b));
    const double phi = std::acos(r) / 3.0;
    const double e0 = q + 2.0 * p * std::cos(phi);
    const double e2 = q + 2.0 * p * std::cos(phi + 2.0 * 3.14159265358979323846 / 3.0);
    const double e1 = 3.0 * q - e0 - e2;
    std::array<double, 3> e{e0, e1, e2};
    std::sort(e.begin(), e.end(), std::greater<double>());
    return e;
}

// Singular values of m as square roots of the eigenvalues of m^T m.
inline std::array<double, 3> singular_values_via_charpoly(const qalign::lin::Mat3& m) {
    const std::array<double, 3> e = eig3_symmetric(qalign::lin::transpose(m) * m);
    std::array<double, 3> s{};
    for (int i = 0; i < 3; ++i) s[static_cast<std::size_t>(i)] =
        std::sqrt(std::max(0.0, e[static_cast<std::size_t>(i)]));
    return s;
}

// Cyclic Jacobi eigenvalues of a small real symmetric matrix.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = a[i][i];
    std::sort(e.begin(), e.end(), std::greater<double>());
    return e;
}

// Eigenvalues of a 4x4 Hermitian matrix via the real 8x8 embedding
// [[Re, -Im], [Im, Re]]; each eigenvalue appears twice, so take every other
// entry of the sorted list.
inline std::array<double, 4> hermitian4_eigenvalues(const qalign::Mat4c& h) {
    std::vector<std::vector<double>> a(8, std::vector<double>(8, 0.0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h(i, j).real();
            a[static_cast<std::size_t>(i + 4)][static_cast<std::size_t>(j + 4)] = h(i, j).real();
            a[static_cast<std::size_t>(i + 4)][static_cast<std::size_t>(j)] = h(i, j).imag();
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 4)] = -h(i, j).imag();
        }
    const std::vector<double> e = jacobi_eigenvalues(std::move(a));
    return {e[0], e[2], e[4], e[6]};
}

inline qalign::lin::Mat3 inverse3(const qalign::lin::Mat3& m) {
    const double d = qalign::lin::det(m);
    qalign::lin::Mat3 inv;
    inv(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
    inv(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
    inv(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
    inv(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
    inv(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
    inv(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
    inv(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
    inv(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
    inv(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
    return inv;
}

}  // namespace oracles
