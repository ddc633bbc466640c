#pragma once

#include <cstdint>
#include <random>

#include "qalign/linalg3.hpp"

namespace qalign {

// Deterministic sampling helpers.  std::mt19937_64 is fully specified by the
// standard; the explicit scalings below avoid the implementation-defined
// behavior of the std distribution templates, so seeded runs reproduce
// bit-identically.

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Uniform in the closed unit ball.
lin::Vec3 sample_ball(std::mt19937_64& rng);

// Uniform on the unit sphere.
lin::Vec3 sample_unit(std::mt19937_64& rng);

// Uniform direction whose double representation is exactly pure: the squared
// norm evaluates to 1.0 and the induced density matrix has determinant <= 0.
// Both computation routes then treat the state as exactly rank one, which is
// what pure-state agreement checks at 1e-9 need (a generic normalized vector
// sits ~1e-16 off the sphere, and square roots turn that into ~1e-8).
lin::Vec3 sample_pure(std::mt19937_64& rng);

// Haar-uniform proper rotation (via a uniform unit quaternion).
lin::Rotation3 sample_rotation(std::mt19937_64& rng);

}  // namespace qalign
