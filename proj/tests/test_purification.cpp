#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qalign/errors.hpp"
#include "qalign/purification.hpp"
#include "qalign/sampling.hpp"

using namespace qalign;
using lin::Mat3;
using lin::Vec3;

TEST_CASE("canonical_purification of the maximally mixed state") {
    const FanoPurification p = canonical_purification(bloch(0, 0, 0));
    CHECK(lin::max_abs(p.a - Mat3::diagonal(1, 1, -1)) == 0.0);
    CHECK(lin::norm(p.gamma) == 0.0);
    CHECK(purity_residual(p) <= 1e-12);
}

TEST_CASE("canonical_purification along the z axis") {
    const FanoPurification p = canonical_purification(bloch(0, 0, 0.6));
    CHECK(lin::max_abs(p.a - Mat3::diagonal(0.8, 0.8, -1)) <= 1e-12);
    CHECK(lin::norm(p.gamma - Vec3{0, 0, -0.6}) <= 1e-12);
    CHECK(purity_residual(p) <= 1e-12);
}

TEST_CASE("canonical_purification at the pure boundary") {
    const FanoPurification p = canonical_purification(bloch(1, 0, 0));
    CHECK(purity_residual(p) <= 1e-10);
    CHECK(std::abs(lin::det(p.a)) <= 1e-12);
    CHECK(std::abs(lin::norm(p.gamma) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(canonical_purification(bloch(1.01, 0, 0)), invalid_state_error);
}

TEST_CASE("purity constraints hold for random and edge radii") {
    std::mt19937_64 rng(101);
    const double edges[5] = {0.0, 1e-8, 0.5, 1.0 - 1e-8, 1.0};
    for (int i = 0; i < 10000; ++i) {
        Vec3 r = sample_ball(rng);
        if (i % 5 == 0) r = edges[(i / 5) % 5] * sample_unit(rng);
        REQUIRE(purity_residual(canonical_purification({r})) <= 1e-10);
    }
}

TEST_CASE("rotate_purification group behavior") {
    std::mt19937_64 rng(102);
    const FanoPurification p = canonical_purification({sample_ball(rng)});
    CHECK(lin::max_abs(rotate_purification(p, {}).a - p.a) == 0.0);

    const lin::Rotation3 s = sample_rotation(rng);
    const FanoPurification q = rotate_purification(p, s);
    const FanoPurification back = rotate_purification(q, {lin::transpose(s.m)});
    CHECK(lin::max_abs(back.a - p.a) <= 1e-12);
    CHECK(lin::norm(back.gamma - p.gamma) <= 1e-12);

    Mat3 improper = Mat3::diagonal(1, 1, -1);
    CHECK_THROWS_AS(rotate_purification(p, {improper}), invalid_input_error);
}

TEST_CASE("rotations preserve the purity constraints and the reduced state") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 3000; ++i) {
        const Vec3 r = sample_ball(rng);
        const FanoPurification p = canonical_purification({r});
        const FanoPurification q = rotate_purification(p, sample_rotation(rng));
        REQUIRE(purity_residual(q) <= 1e-10);
        REQUIRE(std::abs(lin::norm(q.gamma) - lin::norm(p.gamma)) <= 1e-12);
        const BlochVector reduced = bloch_from_density({partial_trace_ancilla(projector_from_fano(q))});
        REQUIRE(lin::norm(reduced.v - r) <= 1e-10);
    }
}

TEST_CASE("fano_overlap_squared reference points") {
    std::mt19937_64 rng(104);
    const FanoPurification p = canonical_purification({sample_ball(rng)});
    CHECK(fano_overlap_squared(p, p) == doctest::Approx(1.0).epsilon(1e-12));

    const FanoPurification north = canonical_purification(bloch(0, 0, 1));
    const FanoPurification south = canonical_purification(bloch(0, 0, -1));
    CHECK(fano_overlap_squared(north, south) <= 1e-12);
}

TEST_CASE("fano_overlap_squared matches the projector trace and is symmetric") {
    std::mt19937_64 rng(105);
    for (int i = 0; i < 2000; ++i) {
        FanoPurification p = canonical_purification({sample_ball(rng)});
        FanoPurification q = canonical_purification({sample_ball(rng)});
        if (i % 2 == 0) {
            p = rotate_purification(p, sample_rotation(rng));
            q = rotate_purification(q, sample_rotation(rng));
        }
        const double direct = fano_overlap_squared(p, q);
        const double via_projector = trace(projector_from_fano(p) * projector_from_fano(q)).real();
        REQUIRE(std::abs(direct - via_projector) <= 1e-10);
        REQUIRE(std::abs(direct - fano_overlap_squared(q, p)) <= 1e-12);
    }
}

TEST_CASE("the rotation orbit covers independently built purifications") {
    std::mt19937_64 rng(106);
    for (int i = 0; i < 2000; ++i) {
        Vec3 r = sample_ball(rng);
        if (lin::norm(r) > 1.0 - 1e-6) r = (1.0 - 1e-6) * r;  // orbit argument needs invertible A
        const FanoPurification p = canonical_purification({r});
        const FanoPurification other = rotate_purification(p, sample_rotation(rng));

        const Mat3 s = oracles::inverse3(p.a) * other.a;
        REQUIRE(lin::orthogonality_defect(s) <= 1e-9);
        REQUIRE(std::abs(lin::det(s) - 1.0) <= 1e-9);
        const FanoPurification regained = rotate_purification(p, {s});
        REQUIRE(lin::max_abs(regained.a - other.a) <= 1e-9);
        REQUIRE(lin::norm(regained.gamma - other.gamma) <= 1e-9);
    }
}

TEST_CASE("validate_purification rejects corrupted data") {
    FanoPurification p = canonical_purification(bloch(0.2, -0.4, 0.5));
    p.gamma.x += 1e-4;
    CHECK_THROWS_AS(validate_purification(p), invalid_purification_error);
    CHECK_THROWS_AS(fano_overlap_squared(p, p), invalid_purification_error);
}
