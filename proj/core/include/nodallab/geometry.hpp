#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "nodallab/errors.hpp"

namespace nodallab {

inline constexpr double kPi = std::numbers::pi;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (n == 0.0) throw DomainError("normalized: zero vector");
    return v / n;
}

/// Point on the unit sphere S^2. Construction enforces |v| = 1 within 1e-14.
class SpherePoint {
public:
    explicit SpherePoint(const Vec3& v) : v_(v) {
        if (std::abs(dot(v, v) - 1.0) > 2.0e-14)
            throw DomainError("SpherePoint: vector is not unit length");
    }

    static SpherePoint normalized(const Vec3& v) { return SpherePoint(nodallab::normalized(v)); }

    static SpherePoint from_angles(double theta, double phi) {
        const double s = std::sin(theta);
        return SpherePoint(Vec3{s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
    }

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

    /// Colatitude in [0, pi].
    double theta() const { return std::acos(std::clamp(v_.z, -1.0, 1.0)); }

    /// Longitude in [0, 2*pi).
    double phi() const {
        double p = std::atan2(v_.y, v_.x);
        if (p < 0.0) p += 2.0 * kPi;
        return p;
    }

private:
    Vec3 v_;
};

/// Rotation matrix acting on R^3 (row-major).
struct Rot3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Rot3 identity() { return {}; }

    static Rot3 from_axis_angle(const Vec3& axis, double angle) {
        const Vec3 u = nodallab::normalized(axis);
        const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
        return Rot3{{t * u.x * u.x + c,      t * u.x * u.y - s * u.z, t * u.x * u.z + s * u.y,
                     t * u.x * u.y + s * u.z, t * u.y * u.y + c,      t * u.y * u.z - s * u.x,
                     t * u.x * u.z - s * u.y, t * u.y * u.z + s * u.x, t * u.z * u.z + c}};
    }

    /// Unit quaternion (w, x, y, z) -> rotation.
    static Rot3 from_quaternion(double w, double x, double y, double z) {
        return Rot3{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
                     2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
                     2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)}};
    }

    /// exp of the skew matrix of w (Rodrigues).
    static Rot3 exp(const Vec3& w) {
        const double a = norm(w);
        if (a < 1e-300) return identity();
        return from_axis_angle(w, a);
    }

    Vec3 apply(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    SpherePoint apply(const SpherePoint& p) const { return SpherePoint::normalized(apply(p.vec())); }

    Rot3 transpose() const {
        return Rot3{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    }

    Rot3 compose(const Rot3& o) const { // this * o
        Rot3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
                r.m[3 * i + j] = s;
            }
        return r;
    }
};

/// Two unit vectors completing `a` to an orthonormal frame.
inline std::pair<Vec3, Vec3> orthonormal_frame(const Vec3& a) {
    const Vec3 u = normalized(a);
    const Vec3 seed = std::abs(u.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = normalized(cross(u, seed));
    const Vec3 e2 = cross(u, e1);
    return {e1, e2};
}

/// Spherical interpolation between unit vectors; falls back to lerp for tiny angles.
inline Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
    const double c = std::clamp(dot(a, b), -1.0, 1.0);
    const double ang = std::acos(c);
    if (ang < 1e-9) return normalized(a * (1.0 - t) + b * t);
    const double s = std::sin(ang);
    return a * (std::sin((1.0 - t) * ang) / s) + b * (std::sin(t * ang) / s);
}

} // namespace nodallab
