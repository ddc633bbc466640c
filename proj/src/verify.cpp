#include "qalign/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qalign/channels.hpp"
#include "qalign/errors.hpp"
#include "qalign/metrics.hpp"
#include "qalign/procrustes.hpp"
#include "qalign/purification.hpp"
#include "qalign/sampling.hpp"

namespace qalign {

namespace {

using lin::Vec3;

double fidelity_consistency(std::size_t samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        Vec3 a = sample_ball(rng);
        Vec3 b = sample_ball(rng);
        // mix in boundary cases: pure-pure and pure-mixed pairs
        if (i % 10 == 3) a = sample_pure(rng);
        if (i % 10 == 3 || i % 10 == 7) b = sample_pure(rng);
        const BlochVector r{a}, s{b};
        const double g = optimal_overlap(r, s).g_star;
        const double f = uhlmann_fidelity(density_from_bloch(r), density_from_bloch(s));
        worst = std::max(worst, std::abs(g - std::sqrt(std::clamp(f, 0.0, 1.0))));
    }
    return worst;
}

double metric_axioms(std::size_t samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const BlochVector r{sample_ball(rng)};
        const BlochVector s{sample_ball(rng)};
        const BlochVector t{sample_ball(rng)};
        const double drs = dn_from_overlap(optimal_overlap(r, s).g_star);
        const double dsr = dn_from_overlap(optimal_overlap(s, r).g_star);
        const double drt = dn_from_overlap(optimal_overlap(r, t).g_star);
        const double dts = dn_from_overlap(optimal_overlap(t, s).g_star);
        worst = std::max(worst, std::abs(drs - dsr));
        worst = std::max(worst, drs - (drt + dts));
        const lin::Rotation3 u = sample_rotation(rng);
        const double dru = dn_from_overlap(optimal_overlap({u.m * r.v}, {u.m * s.v}).g_star);
        worst = std::max(worst, std::abs(dru - drs));
    }
    return worst;
}

double purity_constraints(std::size_t samples, std::mt19937_64& rng) {
    const double edge_radii[5] = {0.0, 1e-8, 0.5, 1.0 - 1e-8, 1.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        Vec3 v = sample_ball(rng);
        if (i % 5 == 0) v = edge_radii[(i / 5) % 5] * sample_unit(rng);
        const FanoPurification p = canonical_purification({v});
        worst = std::max(worst, purity_residual(p));

        const FanoPurification q = canonical_purification({sample_ball(rng)});
        const double direct = fano_overlap_squared(p, q);
        const double via_projector = trace(projector_from_fano(p) * projector_from_fano(q)).real();
        worst = std::max(worst, std::abs(direct - via_projector));
    }
    return worst;
}

double procrustes_optimality(std::size_t samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const BlochVector r{sample_ball(rng)};
        const BlochVector s{sample_ball(rng)};
        const lin::Mat3 k = procrustes_matrix(r, s);
        const ProcrustesSolution sol = procrustes_solve(k);
        const lin::Svd3 svd = lin::svd3(k);
        const double sg = lin::det(svd.v) * lin::det(svd.u) >= 0.0 ? 1.0 : -1.0;
        const double route = svd.sigma[0] + svd.sigma[1] + sg * svd.sigma[2];
        worst = std::max(worst, std::abs(sol.max_trace - route));
        for (int j = 0; j < 1000; ++j) {
            const lin::Rotation3 cand = sample_rotation(rng);
            worst = std::max(worst, lin::trace(k * cand.m) - sol.max_trace);
        }
    }
    return worst;
}

double channel_closed_forms(std::size_t samples, std::mt19937_64& rng) {
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double r = uniform(rng, 0.05, 0.95);
        const double p = uniform(rng, 0.0, 1.0);
        const int family = static_cast<int>(i % 5);
        AffineChannel ch;
        std::string name;
        Vec3 axis;
        double param = p;
        switch (family) {
            case 0:
                ch = depolarizing(p);
                name = "dep";
                axis = sample_unit(rng);
                break;
            case 1:
                ch = bit_flip(p);
                name = "bf";
                axis = lin::z_axis();
                break;
            case 2:
                ch = phase_flip(p);
                name = "pf";
                axis = lin::x_axis();
                break;
            case 3: {
                const double l = uniform(rng, -1.0, 1.0);
                ch = diagonal_pauli(uniform(rng, -1.0, 1.0), l, uniform(rng, -1.0, 1.0));
                name = "pauli";
                axis = lin::y_axis();
                param = l;
                break;
            }
            default:
                ch = amplitude_damping(p);
                name = "ad";
                axis = lin::z_axis();
                break;
        }
        const BlochVector in{r * axis};
        const BlochVector out = apply(ch, in);
        const ProcrustesResult pr = optimal_overlap(in, out);
        worst = std::max(worst, std::abs(pr.g_star - channel_overlap_closed_form(name, param, r)));
        worst = std::max(worst, pr.theta);
    }
    return worst;
}

double su2_lift_consistency(std::size_t samples, std::mt19937_64& rng) {
    double worst = 0.0;
    const Vec3 basis[3] = {lin::x_axis(), lin::y_axis(), lin::z_axis()};
    for (std::size_t i = 0; i < samples; ++i) {
        BlochVector r{sample_ball(rng)};
        BlochVector s{sample_ball(rng)};
        if (i % 7 == 1) {  // theta = 0 family
            const Vec3 n = sample_unit(rng);
            r = {uniform(rng, 0.0, 1.0) * n};
            s = {uniform(rng, 0.0, 1.0) * n};
        } else if (i % 7 == 3) {  // commuting antiparallel pair
            const Vec3 n = sample_unit(rng);
            r = {uniform(rng, 0.05, 0.95) * n};
            s = {-uniform(rng, 0.05, 0.95) * n};
        } else if (i % 7 == 5) {  // theta near pi
            const Vec3 n = sample_unit(rng);
            Vec3 perp = lin::cross(n, sample_unit(rng));
            const double pn = lin::norm(perp);
            if (pn > 1e-6) {
                perp = (1e-3 / pn) * perp;
                r = {0.6 * n};
                s = {-0.5 * n + perp};
            }
        }
        const ProcrustesResult pr = optimal_overlap(r, s);
        for (const Vec3& v : basis) {
            const Mat2c lhs = adjoint(pr.u_star) * pauli_combination(v) * pr.u_star;
            const Mat2c rhs = pauli_combination(pr.s_star.m * v);
            worst = std::max(worst, max_abs_entry(lhs - rhs));
        }
    }
    return worst;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"fidelity-consistency", "metric-axioms",        "purity-constraints",
            "procrustes-optimality", "channel-closed-forms", "su2-lift"};
}

VerifyResult run_verify_suite(const std::string& name, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    VerifyResult res;
    res.suite = name;
    res.samples = samples;
    if (name == "fidelity-consistency") {
        res.tolerance = 1e-9;
        res.max_violation = fidelity_consistency(samples, rng);
    } else if (name == "metric-axioms") {
        res.tolerance = 1e-10;
        res.max_violation = metric_axioms(samples, rng);
    } else if (name == "purity-constraints") {
        res.tolerance = 1e-10;
        res.max_violation = purity_constraints(samples, rng);
    } else if (name == "procrustes-optimality") {
        res.tolerance = 1e-10;
        res.max_violation = procrustes_optimality(samples, rng);
    } else if (name == "channel-closed-forms") {
        res.tolerance = 1e-9;
        res.max_violation = channel_closed_forms(samples, rng);
    } else if (name == "su2-lift") {
        res.tolerance = 1e-10;
        res.max_violation = su2_lift_consistency(samples, rng);
    } else {
        throw invalid_parameter_error("unknown verify suite '" + name + "'");
    }
    res.pass = res.max_violation <= res.tolerance;
    return res;
}

}  // namespace qalign
