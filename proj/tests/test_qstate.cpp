#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qalign/errors.hpp"
#include "qalign/metrics.hpp"
#include "qalign/procrustes.hpp"
#include "qalign/purification.hpp"
#include "qalign/qstate.hpp"
#include "qalign/sampling.hpp"

using namespace qalign;
using lin::Vec3;

namespace {

// Appendix-style closed form for commuting states, frozen to 17 digits.
constexpr double kCollinearFidelity = 0.93495454169735040;  // F for radii 0.8 and 0.4
constexpr double kBinaryEntropy09 = 0.46899559358928122;    // h2(0.9)

DensityMatrix random_density(std::mt19937_64& rng) { return density_from_bloch({sample_ball(rng)}); }

}  // namespace

TEST_CASE("density_from_bloch basics") {
    const DensityMatrix mixed = density_from_bloch(bloch(0, 0, 0));
    CHECK(max_abs_entry(mixed.m - cplx(0.5) * Mat2c::identity()) == 0.0);

    const DensityMatrix north = density_from_bloch(bloch(0, 0, 1));
    CHECK(north.m(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(north.m(1, 1)) == 0.0);

    const DensityMatrix x06 = density_from_bloch(bloch(0.6, 0, 0));
    CHECK(x06.m(0, 1).real() == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(x06.m(0, 1).imag() == 0.0);
    const cplx tr_sx = trace(x06.m * pauli_x());
    CHECK(tr_sx.real() == doctest::Approx(0.6).epsilon(1e-15));

    CHECK_THROWS_AS(density_from_bloch(bloch(1.1, 0, 0)), invalid_state_error);
}

TEST_CASE("bloch_from_density round trips") {
    CHECK(lin::norm(bloch_from_density({cplx(0.5) * Mat2c::identity()}).v) == 0.0);

    Mat2c plus;  // |+><+|
    plus(0, 0) = plus(0, 1) = plus(1, 0) = plus(1, 1) = cplx(0.5);
    const BlochVector b = bloch_from_density({plus});
    CHECK(lin::norm(b.v - lin::x_axis()) <= 1e-15);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        const Vec3 r = sample_ball(rng);
        const BlochVector back = bloch_from_density(density_from_bloch({r}));
        REQUIRE(lin::norm(back.v - r) <= 1e-12);
    }

    Mat2c bad = Mat2c::identity();
    bad(0, 1) = cplx(0.0, 0.3);  // not Hermitian
    CHECK_THROWS_AS(bloch_from_density({bad}), invalid_state_error);
    CHECK_THROWS_AS(bloch_from_density({Mat2c::identity()}), invalid_state_error);  // trace 2
}

TEST_CASE("uhlmann_fidelity reference values") {
    std::mt19937_64 rng(21);
    const DensityMatrix rho = random_density(rng);
    CHECK(std::abs(uhlmann_fidelity(rho, rho) - 1.0) <= 1e-12);

    const DensityMatrix zero = density_from_bloch(bloch(0, 0, 1));
    const DensityMatrix one = density_from_bloch(bloch(0, 0, -1));
    CHECK(uhlmann_fidelity(zero, one) <= 1e-12);

    const DensityMatrix a = density_from_bloch(bloch(0, 0, 0.8));
    const DensityMatrix b = density_from_bloch(bloch(0, 0, 0.4));
    CHECK(uhlmann_fidelity(a, b) == doctest::Approx(kCollinearFidelity).epsilon(1e-12));
}

TEST_CASE("uhlmann_fidelity range, symmetry and unitary invariance") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 5000; ++i) {
        const DensityMatrix rho = random_density(rng);
        const DensityMatrix sig = random_density(rng);
        const double f = uhlmann_fidelity(rho, sig);
        REQUIRE(f >= 0.0);
        REQUIRE(f <= 1.0 + 1e-12);
        REQUIRE(std::abs(f - uhlmann_fidelity(sig, rho)) <= 1e-12);

        const SU2Lift u = lift_su2({sample_unit(rng), uniform(rng, 0.0, 3.141592653589793)});
        const DensityMatrix rho_u{u.u * rho.m * adjoint(u.u)};
        const DensityMatrix sig_u{u.u * sig.m * adjoint(u.u)};
        REQUIRE(std::abs(uhlmann_fidelity(rho_u, sig_u) - f) <= 1e-10);
    }
}

TEST_CASE("fidelity reaches one only for equal states") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        const Vec3 r = sample_ball(rng);
        Vec3 s = sample_ball(rng);
        const double f = uhlmann_fidelity(density_from_bloch({r}), density_from_bloch({s}));
        if (lin::norm(r - s) > 1e-4) REQUIRE(f < 1.0 - 1e-12);
    }
}

TEST_CASE("von_neumann_entropy") {
    CHECK(von_neumann_entropy(density_from_bloch(bloch(0, 0, 0))) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(von_neumann_entropy(density_from_bloch(bloch(0, 0, 1))) == 0.0);
    CHECK(von_neumann_entropy(density_from_bloch(bloch(0, 0, 0.8))) ==
          doctest::Approx(kBinaryEntropy09).epsilon(1e-12));  // eigenvalues 0.9 / 0.1
}

TEST_CASE("qjsd basics and the overlap bound") {
    std::mt19937_64 rng(24);
    const DensityMatrix rho = random_density(rng);
    CHECK(qjsd(rho, rho) <= 1e-12);

    const DensityMatrix zero = density_from_bloch(bloch(0, 0, 1));
    const DensityMatrix one = density_from_bloch(bloch(0, 0, -1));
    CHECK(qjsd(zero, one) == doctest::Approx(1.0).epsilon(1e-12));

    for (int i = 0; i < 10000; ++i) {
        const DensityMatrix a = random_density(rng);
        const DensityMatrix b = random_density(rng);
        const double f = uhlmann_fidelity(a, b);
        const double bound = binary_entropy(0.5 * (1.0 + std::sqrt(f)));
        REQUIRE(qjsd(a, b) <= bound + 1e-12);
    }

    // equality for pure pairs
    for (int i = 0; i < 1000; ++i) {
        const DensityMatrix a = density_from_bloch({sample_unit(rng)});
        const DensityMatrix b = density_from_bloch({sample_unit(rng)});
        const double f = uhlmann_fidelity(a, b);
        const double bound = binary_entropy(0.5 * (1.0 + std::sqrt(std::min(1.0, f))));
        REQUIRE(std::abs(qjsd(a, b) - bound) <= 1e-9);
    }
}

TEST_CASE("projector_from_fano of the maximally mixed canonical gauge") {
    const Mat4c p = projector_from_fano(canonical_purification(bloch(0, 0, 0)));
    const std::array<double, 4> eig = oracles::hermitian4_eigenvalues(p);
    CHECK(std::abs(eig[0] - 1.0) <= 1e-10);
    CHECK(std::abs(eig[1]) <= 1e-10);
    CHECK(std::abs(eig[2]) <= 1e-10);
    CHECK(std::abs(eig[3]) <= 1e-10);
}

TEST_CASE("projector_from_fano of a pure state is a product projector") {
    const Mat4c p = projector_from_fano(canonical_purification(bloch(0, 0, 1)));
    const Mat2c sys = partial_trace_ancilla(p);
    const DensityMatrix expect = density_from_bloch(bloch(0, 0, 1));
    CHECK(max_abs_entry(sys - expect.m) <= 1e-12);
    // rank one on each factor: both reduced states are pure
    const Mat2c anc = partial_trace_system(p);
    const Eig2 e = eig2_hermitian(anc);
    CHECK(std::abs(e.values[0] - 1.0) <= 1e-10);
    CHECK(std::abs(e.values[1]) <= 1e-10);
    CHECK(max_abs_entry(p * p - p) <= 1e-10);
}

TEST_CASE("projector_from_fano properties on random purifications") {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 2000; ++i) {
        const Vec3 r = sample_ball(rng);
        FanoPurification p = canonical_purification({r});
        if (i % 2 == 0) p = rotate_purification(p, sample_rotation(rng));
        const Mat4c proj = projector_from_fano(p);
        REQUIRE(max_abs_entry(proj * proj - proj) <= 1e-10);
        REQUIRE(std::abs(trace(proj) - cplx(1.0)) <= 1e-12);
        REQUIRE(max_abs_entry(partial_trace_ancilla(proj) - density_from_bloch({r}).m) <= 1e-12);
        const Mat2c anc = partial_trace_system(proj);
        const Mat2c want = cplx(0.5) * (Mat2c::identity() + pauli_combination(p.gamma));
        REQUIRE(max_abs_entry(anc - want) <= 1e-12);
    }
}

TEST_CASE("projector_from_fano rejects broken purity data") {
    FanoPurification p = canonical_purification(bloch(0.3, 0.2, 0.1));
    p.a(0, 0) += 1e-3;
    CHECK_THROWS_AS(projector_from_fano(p), invalid_purification_error);
}

TEST_CASE("pure bipartite state helpers") {
    PureBipartiteState psi;
    psi.amp = {cplx(std::sqrt(0.5)), cplx(0.0), cplx(0.0), cplx(std::sqrt(0.5))};
    CHECK(state_norm(psi) == doctest::Approx(1.0).epsilon(1e-15));
    const Mat4c p = projector(psi);
    CHECK(max_abs_entry(p * p - p) <= 1e-14);
    const Mat2c reduced = partial_trace_ancilla(p);
    CHECK(max_abs_entry(reduced - cplx(0.5) * Mat2c::identity()) <= 1e-14);

    // ancilla unitaries leave the reduced system state alone
    std::mt19937_64 rng(26);
    const SU2Lift u = lift_su2({sample_unit(rng), 1.1});
    const PureBipartiteState moved = apply_ancilla_unitary(psi, u.u);
    CHECK(state_norm(moved) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_abs_entry(partial_trace_ancilla(projector(moved)) - reduced) <= 1e-12);
}
