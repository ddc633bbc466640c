#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qalign/errors.hpp"
#include "qalign/metrics.hpp"
#include "qalign/sampling.hpp"

using namespace qalign;
using lin::Vec3;

namespace {

constexpr double kBinaryEntropy09 = 0.46899559358928122;
constexpr double kCollinearOverlap = 0.96693047407626491;
constexpr double kDnOfCollinear = 0.34858985480715083;
constexpr double kBures05 = 0.76536686473017954;
constexpr double kQuarterPi = 0.78539816339744831;
constexpr double kInvSqrt2 = 0.70710678118654752;

}  // namespace

TEST_CASE("binary_entropy") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.9) == doctest::Approx(kBinaryEntropy09).epsilon(1e-12));
    CHECK(binary_entropy(0.1) == doctest::Approx(kBinaryEntropy09).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.1), invalid_input_error);
    CHECK_THROWS_AS(binary_entropy(1.1), invalid_input_error);
}

TEST_CASE("dn_from_overlap") {
    CHECK(dn_from_overlap(1.0) == 0.0);
    CHECK(dn_from_overlap(0.0) == 1.0);
    CHECK(dn_from_overlap(kCollinearOverlap) == doctest::Approx(kDnOfCollinear).epsilon(1e-12));
    // monotone decreasing
    double prev = 1.0;
    for (int i = 1; i <= 100; ++i) {
        const double d = dn_from_overlap(i / 100.0);
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("bures distance, bures angle, root infidelity") {
    CHECK(bures_from_fidelity(1.0) == 0.0);
    CHECK(bures_angle_from_fidelity(1.0) == 0.0);
    CHECK(root_infidelity_from_fidelity(1.0) == 0.0);
    CHECK(bures_from_fidelity(0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(bures_angle_from_fidelity(0.0) == doctest::Approx(2.0 * kQuarterPi).epsilon(1e-15));
    CHECK(root_infidelity_from_fidelity(0.0) == 1.0);
    CHECK(bures_from_fidelity(0.5) == doctest::Approx(kBures05).epsilon(1e-12));
    CHECK(bures_angle_from_fidelity(0.5) == doctest::Approx(kQuarterPi).epsilon(1e-12));
    CHECK(root_infidelity_from_fidelity(0.5) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
}

TEST_CASE("metric_report on reference pairs") {
    const MetricReport same = metric_report(bloch(0.2, 0.1, -0.5), bloch(0.2, 0.1, -0.5));
    CHECK(same.g_star == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same.d_n <= 1e-7);
    CHECK(same.bures <= 1e-7);
    CHECK(same.theta == 0.0);

    const MetricReport anti = metric_report(bloch(0, 0, 1), bloch(0, 0, -1));
    CHECK(anti.d_n == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(anti.bures == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(anti.root_infidelity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("metric_report fields are consistent") {
    std::mt19937_64 rng(401);
    for (int i = 0; i < 3000; ++i) {
        const MetricReport rep = metric_report({sample_ball(rng)}, {sample_ball(rng)});
        REQUIRE(std::abs(rep.fidelity - rep.g_star * rep.g_star) <= 1e-12);
        REQUIRE(rep.d_n >= 0.0);
        REQUIRE(rep.d_n <= 1.0);
        REQUIRE(rep.bures <= std::sqrt(2.0) + 1e-12);
        REQUIRE(rep.bures_angle <= 2.0 * kQuarterPi + 1e-12);
        REQUIRE(rep.root_infidelity <= 1.0);
        REQUIRE(rep.theta >= 0.0);
        REQUIRE(rep.theta <= 2.0 * kQuarterPi * 2.0);
    }
}

TEST_CASE("d_n metric axioms") {
    std::mt19937_64 rng(402);
    for (int i = 0; i < 2000; ++i) {
        const BlochVector r{sample_ball(rng)};
        const BlochVector s{sample_ball(rng)};
        const BlochVector t{sample_ball(rng)};
        const double drs = metric_report(r, s).d_n;
        REQUIRE(std::abs(drs - metric_report(s, r).d_n) <= 1e-10);
        REQUIRE(drs <= metric_report(r, t).d_n + metric_report(t, s).d_n + 1e-10);
        const lin::Rotation3 u = sample_rotation(rng);
        REQUIRE(std::abs(metric_report({u.m * r.v}, {u.m * s.v}).d_n - drs) <= 1e-10);
    }
}

TEST_CASE("distinct states keep a visible distance") {
    // contrapositive of identity of indiscernibles:
    // separations of 1e-4 must not collapse below 1e-6
    std::mt19937_64 rng(403);
    for (int i = 0; i < 2000; ++i) {
        Vec3 r = sample_ball(rng);
        if (lin::norm(r) > 1.0 - 3e-4) r = (1.0 - 3e-4) * r;
        Vec3 step = sample_unit(rng);
        const Vec3 s = r + uniform(rng, 1e-4, 2e-4) * step;
        if (lin::norm(s) > 1.0) continue;
        REQUIRE(metric_report({r}, {s}).d_n >= 1e-6);
    }
}

TEST_CASE("maximal distance happens exactly at orthogonal supports") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 500; ++i) {
        const Vec3 n = sample_unit(rng);
        const MetricReport rep = metric_report({n}, {-1.0 * n});
        REQUIRE(std::abs(rep.d_n - 1.0) <= 1e-12);
        REQUIRE(rep.fidelity <= 1e-12);
        // squeeze one state into the interior: the distance drops below 1
        const MetricReport inner = metric_report({n}, {-0.999 * n});
        REQUIRE(inner.d_n < 1.0 - 1e-6);
    }
}

TEST_CASE("pure-state reduction ties d_n to the mixture entropy and qjsd") {
    std::mt19937_64 rng(405);
    for (int i = 0; i < 1000; ++i) {
        const BlochVector r{sample_unit(rng)};
        const BlochVector s{sample_unit(rng)};
        const double dn2 = std::pow(metric_report(r, s).d_n, 2);
        const DensityMatrix rho = density_from_bloch(r);
        const DensityMatrix sig = density_from_bloch(s);
        const DensityMatrix half{cplx(0.5) * (rho.m + sig.m)};
        REQUIRE(std::abs(dn2 - von_neumann_entropy(half)) <= 1e-10);
        REQUIRE(std::abs(dn2 - qjsd(rho, sig)) <= 1e-10);
    }
}

TEST_CASE("d_n squared dominates the Jensen-Shannon divergence") {
    std::mt19937_64 rng(406);
    for (int i = 0; i < 1000; ++i) {
        const BlochVector r{sample_ball(rng)};
        const BlochVector s{sample_ball(rng)};
        const double dn2 = std::pow(metric_report(r, s).d_n, 2);
        REQUIRE(qjsd(density_from_bloch(r), density_from_bloch(s)) <= dn2 + 1e-12);
    }
}
