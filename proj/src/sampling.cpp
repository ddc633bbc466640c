#include "qalign/sampling.hpp"

#include <cmath>

#include "qalign/qstate.hpp"

namespace qalign {

lin::Vec3 sample_ball(std::mt19937_64& rng) {
    for (;;) {
        const lin::Vec3 v{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        if (lin::norm2(v) <= 1.0) return v;
    }
}

lin::Vec3 sample_unit(std::mt19937_64& rng) {
    for (;;) {
        const lin::Vec3 v{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        const double n2 = lin::norm2(v);
        if (n2 > 1e-6 && n2 <= 1.0) return (1.0 / std::sqrt(n2)) * v;
    }
}

lin::Vec3 sample_pure(std::mt19937_64& rng) {
    for (;;) {
        const lin::Vec3 v = sample_unit(rng);
        if (lin::norm2(v) != 1.0) continue;
        if (hermitian_det(density_from_bloch({v}).m) <= 0.0) return v;
    }
}

lin::Rotation3 sample_rotation(std::mt19937_64& rng) {
    double w, x, y, z;
    for (;;) {
        w = uniform(rng, -1.0, 1.0);
        x = uniform(rng, -1.0, 1.0);
        y = uniform(rng, -1.0, 1.0);
        z = uniform(rng, -1.0, 1.0);
        const double n2 = w * w + x * x + y * y + z * z;
        if (n2 > 1e-6 && n2 <= 1.0) {
            const double inv = 1.0 / std::sqrt(n2);
            w *= inv;
            x *= inv;
            y *= inv;
            z *= inv;
            break;
        }
    }
    lin::Mat3 m;
    m(0, 0) = 1.0 - 2.0 * (y * y + z * z);
    m(0, 1) = 2.0 * (x * y - w * z);
    m(0, 2) = 2.0 * (x * z + w * y);
    m(1, 0) = 2.0 * (x * y + w * z);
    m(1, 1) = 1.0 - 2.0 * (x * x + z * z);
    m(1, 2) = 2.0 * (y * z - w * x);
    m(2, 0) = 2.0 * (x * z - w * y);
    m(2, 1) = 2.0 * (y * z + w * x);
    m(2, 2) = 1.0 - 2.0 * (x * x + y * y);
    return {m};
}

}  // namespace qalign
