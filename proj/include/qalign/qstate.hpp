#pragma once

#include <array>
#include <complex>

#include "qalign/linalg3.hpp"

namespace qalign {

using cplx = std::complex<double>;

// 2x2 complex matrix, row-major.
struct Mat2c {
    std::array<cplx, 4> a{};

    cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
    cplx operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

    static Mat2c identity() { return {{cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)}}; }
    static Mat2c zero() { return {}; }
};

Mat2c operator*(const Mat2c& x, const Mat2c& y);
Mat2c operator+(const Mat2c& x, const Mat2c& y);
Mat2c operator-(const Mat2c& x, const Mat2c& y);
Mat2c operator*(cplx s, const Mat2c& x);
Mat2c adjoint(const Mat2c& x);
cplx trace(const Mat2c& x);
double max_abs_entry(const Mat2c& x);
double hermiticity_defect(const Mat2c& x);

Mat2c pauli_x();
Mat2c pauli_y();
Mat2c pauli_z();
Mat2c pauli(int i);  // i = 0,1,2 for x,y,z
Mat2c pauli_combination(const lin::Vec3& v);  // v . sigma

// 4x4 complex matrix on system (x) ancilla, row-major; the basis index is
// 2*system + ancilla.
struct Mat4c {
    std::array<cplx, 16> a{};

    cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(4 * i + j)]; }
    cplx operator()(int i, int j) const { return a[static_cast<std::size_t>(4 * i + j)]; }

    static Mat4c identity();
};

Mat4c operator*(const Mat4c& x, const Mat4c& y);
Mat4c operator-(const Mat4c& x, const Mat4c& y);
cplx trace(const Mat4c& x);
double max_abs_entry(const Mat4c& x);
Mat4c kron(const Mat2c& s, const Mat2c& anc);
Mat2c partial_trace_ancilla(const Mat4c& p);
Mat2c partial_trace_system(const Mat4c& p);

// Bloch vector of a qubit state, ||r|| <= 1.
struct BlochVector {
    lin::Vec3 v{};
};

inline BlochVector bloch(double x, double y, double z) { return {{x, y, z}}; }
inline double radius(const BlochVector& b) { return lin::norm(b.v); }

// Throws invalid_state_error if ||r|| exceeds 1 beyond tol.
void validate_bloch(const BlochVector& b, double tol = 1e-9);

// 2x2 density matrix: Hermitian, unit trace, positive semidefinite.
struct DensityMatrix {
    Mat2c m = Mat2c::identity();  // callers should construct via density_from_bloch
};

void validate_density(const DensityMatrix& rho, double tol = 1e-9);

// Pure state on system (x) ancilla; unit norm.
struct PureBipartiteState {
    std::array<cplx, 4> amp{};
};

double state_norm(const PureBipartiteState& psi);
Mat4c projector(const PureBipartiteState& psi);
// (I (x) u) |psi>
PureBipartiteState apply_ancilla_unitary(const PureBipartiteState& psi, const Mat2c& u);

// Closed-form eigendecomposition of a 2x2 Hermitian matrix; values are in
// nonincreasing order and vectors are the matching orthonormal columns.
struct Eig2 {
    std::array<double, 2> values{};
    Mat2c vectors;
};

Eig2 eig2_hermitian(const Mat2c& h);

// det of a Hermitian 2x2, evaluated in extended precision; for a density
// matrix this is the purity indicator (1 - |r|^2)/4.
double hermitian_det(const Mat2c& h);

// rho = (I + r.sigma) / 2
DensityMatrix density_from_bloch(const BlochVector& r);
BlochVector bloch_from_density(const DensityMatrix& rho);

// F(rho, sigma) = [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2, evaluated spectrally.
// This is the independent oracle the Procrustes pipeline is validated against.
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// -Tr(rho log2 rho), in bits.
double von_neumann_entropy(const DensityMatrix& rho);

// S((rho+sigma)/2) - S(rho)/2 - S(sigma)/2, in bits.
double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma);

struct FanoPurification;  // defined in purification.hpp

// (1/4) (I(x)I + r.sigma(x)I + I(x)gamma.sigma + sum_ij A_ij sigma_i(x)sigma_j)
Mat4c projector_from_fano(const FanoPurification& p);

}  // namespace qalign
