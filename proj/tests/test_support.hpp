#pragma once

// Hand-rolled generators for property tests. Every generator is seeded so
// failures reproduce.

#include "pointlike/core.hpp"

#include <cmath>
#include <random>

namespace pointlike::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    Complex complex_unit_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

    BoundaryData boundary() { return {complex_unit_box(), complex_unit_box()}; }

    /// e^{i theta} R(phi) diag(r, 1/r) [[1, 0], [s, 1]]: a well-conditioned
    /// draw from the symplectic-unitary group.
    Matrix2 symplectic_unitary()
    {
        const double theta = uniform(0.0, 2.0 * M_PI);
        const double phi = uniform(0.0, 2.0 * M_PI);
        const double r = std::exp(uniform(-0.7, 0.7));
        const double s = uniform(-2.0, 2.0);
        const Matrix2 rot{std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi)};
        const Matrix2 stretch = Matrix2::diagonal(r, 1.0 / r);
        const Matrix2 shear{1.0, 0.0, s, 1.0};
        return std::polar(1.0, theta) * (rot * stretch * shear);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace pointlike::testing
