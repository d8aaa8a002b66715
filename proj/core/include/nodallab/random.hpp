#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "nodallab/geometry.hpp"

namespace nodallab {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Seeded random source. Distributions are hand-rolled on top of the raw
/// mt19937_64 stream so a given seed yields the same values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * kPi * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * kPi * u2);
    }

    /// Uniform on S^2.
    Vec3 unit_vec3() {
        const double z = uniform(-1.0, 1.0);
        const double phi = uniform(0.0, 2.0 * kPi);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {s * std::cos(phi), s * std::sin(phi), z};
    }

    SpherePoint sphere_point() { return SpherePoint::normalized(unit_vec3()); }

    /// Uniform on S^3 (unit quaternion, w first).
    std::array<double, 4> unit_quaternion() {
        std::array<double, 4> q{normal(), normal(), normal(), normal()};
        double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
        while (n < 1e-12) {
            q = {normal(), normal(), normal(), normal()};
            n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
        }
        return {q[0] / n, q[1] / n, q[2] / n, q[3] / n};
    }

    /// Haar-uniform rotation.
    Rot3 rotation() {
        const auto q = unit_quaternion();
        return Rot3::from_quaternion(q[0], q[1], q[2], q[3]);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace nodallab
