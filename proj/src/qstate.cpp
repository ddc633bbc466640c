#include "qalign/qstate.hpp"

#include <algorithm>
#include <cmath>

#include "qalign/errors.hpp"
#include "qalign/purification.hpp"

namespace qalign {

Mat2c operator*(const Mat2c& x, const Mat2c& y) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
}

Mat2c operator+(const Mat2c& x, const Mat2c& y) {
    Mat2c r;
    for (int k = 0; k < 4; ++k) r.a[static_cast<std::size_t>(k)] =
        x.a[static_cast<std::size_t>(k)] + y.a[static_cast<std::size_t>(k)];
    return r;
}

Mat2c operator-(const Mat2c& x, const Mat2c& y) {
    Mat2c r;
    for (int k = 0; k < 4; ++k) r.a[static_cast<std::size_t>(k)] =
        x.a[static_cast<std::size_t>(k)] - y.a[static_cast<std::size_t>(k)];
    return r;
}

Mat2c operator*(cplx s, const Mat2c& x) {
    Mat2c r;
    for (int k = 0; k < 4; ++k) r.a[static_cast<std::size_t>(k)] = s * x.a[static_cast<std::size_t>(k)];
    return r;
}

Mat2c adjoint(const Mat2c& x) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj(x(j, i));
    return r;
}

cplx trace(const Mat2c& x) { return x(0, 0) + x(1, 1); }

double max_abs_entry(const Mat2c& x) {
    double r = 0.0;
    for (const cplx& e : x.a) r = std::max(r, std::abs(e));
    return r;
}

double hermiticity_defect(const Mat2c& x) { return max_abs_entry(x - adjoint(x)); }

Mat2c pauli_x() { return {{cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0)}}; }
Mat2c pauli_y() { return {{cplx(0.0), cplx(0.0, -1.0), cplx(0.0, 1.0), cplx(0.0)}}; }
Mat2c pauli_z() { return {{cplx(1.0), cplx(0.0), cplx(0.0), cplx(-1.0)}}; }

Mat2c pauli(int i) {
    switch (i) {
        case 0: return pauli_x();
        case 1: return pauli_y();
        default: return pauli_z();
    }
}

Mat2c pauli_combination(const lin::Vec3& v) {
    return {{cplx(v.z), cplx(v.x, -v.y), cplx(v.x, v.y), cplx(-v.z)}};
}

Mat4c Mat4c::identity() {
    Mat4c r;
    for (int i = 0; i < 4; ++i) r(i, i) = cplx(1.0);
    return r;
}

Mat4c operator*(const Mat4c& x, const Mat4c& y) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s(0.0);
            for (int k = 0; k < 4; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat4c operator-(const Mat4c& x, const Mat4c& y) {
    Mat4c r;
    for (int k = 0; k < 16; ++k) r.a[static_cast<std::size_t>(k)] =
        x.a[static_cast<std::size_t>(k)] - y.a[static_cast<std::size_t>(k)];
    return r;
}

cplx trace(const Mat4c& x) { return x(0, 0) + x(1, 1) + x(2, 2) + x(3, 3); }

double max_abs_entry(const Mat4c& x) {
    double r = 0.0;
    for (const cplx& e : x.a) r = std::max(r, std::abs(e));
    return r;
}

Mat4c kron(const Mat2c& s, const Mat2c& anc) {
    Mat4c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = s(i, j) * anc(k, l);
    return r;
}

Mat2c partial_trace_ancilla(const Mat4c& p) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = p(2 * i, 2 * j) + p(2 * i + 1, 2 * j + 1);
    return r;
}

Mat2c partial_trace_system(const Mat4c& p) {
    Mat2c r;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(k, l) = p(k, l) + p(2 + k, 2 + l);
    return r;
}

void validate_bloch(const BlochVector& b, double tol) {
    if (!lin::is_finite(b.v)) throw invalid_state_error("bloch vector has non-finite components");
    if (radius(b) > 1.0 + tol) throw invalid_state_error("bloch vector lies outside the unit ball");
}

void validate_density(const DensityMatrix& rho, double tol) {
    for (const cplx& e : rho.m.a)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw invalid_state_error("density matrix has non-finite entries");
    if (hermiticity_defect(rho.m) > tol) throw invalid_state_error("density matrix is not Hermitian");
    if (std::abs(trace(rho.m) - cplx(1.0)) > tol) throw invalid_state_error("density matrix trace is not 1");
    const Eig2 e = eig2_hermitian(rho.m);
    if (e.values[1] < -tol) throw invalid_state_error("density matrix has a negative eigenvalue");
}

double state_norm(const PureBipartiteState& psi) {
    double n2 = 0.0;
    for (const cplx& c : psi.amp) n2 += std::norm(c);
    return std::sqrt(n2);
}

Mat4c projector(const PureBipartiteState& psi) {
    Mat4c p;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            p(i, j) = psi.amp[static_cast<std::size_t>(i)] * std::conj(psi.amp[static_cast<std::size_t>(j)]);
    return p;
}

PureBipartiteState apply_ancilla_unitary(const PureBipartiteState& psi, const Mat2c& u) {
    PureBipartiteState out;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 2; ++i)
            out.amp[static_cast<std::size_t>(2 * s + i)] =
                u(i, 0) * psi.amp[static_cast<std::size_t>(2 * s)] +
                u(i, 1) * psi.amp[static_cast<std::size_t>(2 * s + 1)];
    return out;
}

double hermitian_det(const Mat2c& h) {
    // The determinant is the cancellation-prone quantity here (it carries the
    // purity information), so evaluate it in extended precision.
    const long double a = h(0, 0).real();
    const long double c = h(1, 1).real();
    const long double br = h(0, 1).real();
    const long double bi = h(0, 1).imag();
    return static_cast<double>(a * c - (br * br + bi * bi));
}

Eig2 eig2_hermitian(const Mat2c& h) {
    const double a = h(0, 0).real();
    const double c = h(1, 1).real();
    const cplx b = h(0, 1);
    const double mean = 0.5 * (a + c);
    const double q = std::hypot(0.5 * (a - c), std::abs(b));

    Eig2 out;
    // The large eigenvalue is well conditioned as mean + q; the small one is
    // recovered through the determinant, which keeps exact rank deficiency
    // exact instead of smearing it by sqrt(eps).
    const double lp = mean + q;
    out.values = {lp, lp > 0.0 ? hermitian_det(h) / lp : mean - q};

    if (b == cplx(0.0)) {
        if (a >= c) {
            out.vectors = Mat2c::identity();
        } else {
            out.vectors = {{cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0)}};
        }
        return out;
    }

    // Eigenvector for the larger eigenvalue: (b, l-a) or (l-c, conj(b)),
    // whichever is better scaled.
    cplx v0, v1;
    if (std::abs(lp - a) >= std::abs(lp - c)) {
        v0 = b;
        v1 = cplx(lp - a);
    } else {
        v0 = cplx(lp - c);
        v1 = std::conj(b);
    }
    const double n = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= n;
    v1 /= n;
    out.vectors = {{v0, -std::conj(v1), v1, std::conj(v0)}};
    return out;
}

DensityMatrix density_from_bloch(const BlochVector& r) {
    validate_bloch(r);
    Mat2c m;
    m(0, 0) = cplx(0.5 * (1.0 + r.v.z));
    m(0, 1) = cplx(0.5 * r.v.x, -0.5 * r.v.y);
    m(1, 0) = cplx(0.5 * r.v.x, 0.5 * r.v.y);
    m(1, 1) = cplx(0.5 * (1.0 - r.v.z));
    return {m};
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
    for (const cplx& e : rho.m.a)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw invalid_state_error("density matrix has non-finite entries");
    if (hermiticity_defect(rho.m) > 1e-9) throw invalid_state_error("density matrix is not Hermitian");
    if (std::abs(trace(rho.m) - cplx(1.0)) > 1e-9) throw invalid_state_error("density matrix trace is not 1");
    return bloch(2.0 * rho.m(0, 1).real(), -2.0 * rho.m(0, 1).imag(),
                 rho.m(0, 0).real() - rho.m(1, 1).real());
}

namespace {

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

Mat2c sqrt_psd(const Mat2c& h) {
    const Eig2 e = eig2_hermitian(h);
    const double s0 = std::sqrt(clamp01(e.values[0]));
    const double s1 = std::sqrt(clamp01(e.values[1]));
    // V diag(s) V^dagger
    Mat2c d;
    d(0, 0) = cplx(s0);
    d(1, 1) = cplx(s1);
    return e.vectors * d * adjoint(e.vectors);
}

double entropy_bits_of_eigenvalue(double lambda) {
    if (lambda <= 0.0) return 0.0;
    return -lambda * std::log2(lambda);
}

double entropy_of_density(const Mat2c& m) {
    const Eig2 e = eig2_hermitian(m);
    return entropy_bits_of_eigenvalue(clamp01(e.values[0])) +
           entropy_bits_of_eigenvalue(clamp01(e.values[1]));
}

}  // namespace

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    validate_density(rho);
    validate_density(sigma);
    const Mat2c sq = sqrt_psd(rho.m);
    Mat2c x = sq * sigma.m * sq;
    // x is Hermitian up to roundoff; symmetrize before the spectral step
    x = cplx(0.5) * (x + adjoint(x));
    // Eigenvalues of x from its trace and determinant.  det(x) multiplies
    // out to det(rho) det(sigma), which is far better conditioned than the
    // determinant of the computed product.
    const double t = trace(x).real();
    const double dx = std::max(0.0, hermitian_det(rho.m)) * std::max(0.0, hermitian_det(sigma.m));
    const double q = std::sqrt(std::max(0.0, 0.25 * t * t - dx));
    const double lp = 0.5 * t + q;
    const double lm = lp > 0.0 ? dx / lp : 0.0;
    const double amp = std::sqrt(clamp01(lp)) + std::sqrt(clamp01(lm));
    return amp * amp;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    validate_density(rho);
    return entropy_of_density(rho.m);
}

double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma) {
    validate_density(rho);
    validate_density(sigma);
    const Mat2c mix = cplx(0.5) * (rho.m + sigma.m);
    const double d = entropy_of_density(mix) -
                     0.5 * entropy_of_density(rho.m) -
                     0.5 * entropy_of_density(sigma.m);
    if (d < -1e-10) throw consistency_error("qjsd: concavity violated beyond roundoff");
    return std::max(0.0, d);
}

Mat4c projector_from_fano(const FanoPurification& p) {
    validate_purification(p);
    const Mat2c id = Mat2c::identity();
    Mat4c out = kron(id, id);
    const Mat2c rs = pauli_combination(p.r.v);
    const Mat2c gs = pauli_combination(p.gamma);
    Mat4c t = kron(rs, id);
    for (int k = 0; k < 16; ++k) out.a[static_cast<std::size_t>(k)] += t.a[static_cast<std::size_t>(k)];
    t = kron(id, gs);
    for (int k = 0; k < 16; ++k) out.a[static_cast<std::size_t>(k)] += t.a[static_cast<std::size_t>(k)];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double w = p.a(i, j);
            if (w == 0.0) continue;
            t = kron(pauli(i), pauli(j));
            for (int k = 0; k < 16; ++k)
                out.a[static_cast<std::size_t>(k)] += cplx(w) * t.a[static_cast<std::size_t>(k)];
        }
    for (cplx& e : out.a) e *= 0.25;
    return out;
}

}  // namespace qalign
