#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "nodallab/geometry.hpp"
#include "nodallab/harmonics.hpp"
#include "nodallab/random.hpp"

namespace nodallab {

using CVec2 = std::array<std::complex<double>, 2>;

/// Element of SU(2): the matrix [[a, -conj(b)], [b, conj(a)]], |a|^2 + |b|^2 = 1.
class SU2Element {
public:
    SU2Element(std::complex<double> a, std::complex<double> b);
    static SU2Element identity() { return {{1.0, 0.0}, {0.0, 0.0}}; }

    /// (w, x, y, z) on S^3 -> a = w + ix, b = y + iz.
    static SU2Element from_quaternion(const std::array<double, 4>& q);
    std::array<double, 4> to_quaternion() const;

    std::complex<double> a() const { return a_; }
    std::complex<double> b() const { return b_; }

    CVec2 apply(const CVec2& v) const;

    /// | |a|^2 + |b|^2 - 1 |, the unit-determinant (= unitarity) drift.
    double det_defect() const;

private:
    std::complex<double> a_, b_;
};

/// sum_i x_i conj(y_i).
std::complex<double> hermitian_inner(const CVec2& x, const CVec2& y);

struct OrbitCertificate {
    SU2Element g = SU2Element::identity();
    double residual = 0.0; // |<g v, h>| / (|v| |h|)
    int restarts_used = 0;
    int iterations = 0;
};

/// Witness that the SU(2) orbit of v meets the hyperplane {x : <x, h> = 0}, found by
/// multi-start projected gradient descent on the quaternion 3-sphere.
OrbitCertificate orbit_meets_hyperplane(const CVec2& v, const CVec2& h, Rng& rng,
                                        int max_restarts = 50);

inline constexpr int kMaxActionDegree = 4;

/// SO(3) action on degree-n eigenfunction coefficients, realized by sampling: rotate
/// the quadrature points and re-project onto the basis. Conditioned up to degree 4.
class SO3Action {
public:
    explicit SO3Action(int degree);

    int degree() const { return degree_; }
    int dim() const { return 2 * degree_ + 1; }

    /// Coefficients of p -> f(R^{-1} p).
    std::vector<double> apply(const Rot3& R, std::span<const double> coeffs) const;

    /// Matrix of the action (columns are the images of basis vectors).
    std::vector<double> matrix(const Rot3& R) const; // row-major dim x dim

    /// Generator L_k = d/dt sigma(exp(t e_k^hat)) at t = 0; row-major dim x dim.
    const std::vector<double>& generator(int k) const { return gen_[k]; }

private:
    int degree_;
    std::vector<double> nodes_x_, weights_x_;
    int nphi_ = 0;
    std::array<std::vector<double>, 3> gen_;
};

struct Codim2Certificate {
    Rot3 g;
    double residual_y = 0.0; // |<sigma(g) x, y>| with unit x, y
    double residual_z = 0.0;
    int restarts_used = 0;
};

/// Witness that the orbit of x meets the codimension-2 subspace orthogonal to y and z.
Codim2Certificate codim2_orbit_meets(const SO3Action& action, std::span<const double> x,
                                     std::span<const double> y, std::span<const double> z,
                                     Rng& rng, int max_restarts = 50);

/// Grid minimum over the sphere of max(|l0|, |q0|) with l0 = x3 and
/// q0 = x1^2 + x2^2 - 2 x3^2: strictly positive, so the orbit of l0 + q0 misses the
/// codimension-2 subspace cut out at e3. The (theta, phi) grid has ~sqrt(resolution)
/// steps per axis; quadrupling the resolution nests the grid.
double counterexample_min(long long resolution);

} // namespace nodallab
