#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "nodallab/geometry.hpp"
#include "nodallab/random.hpp"

namespace nodallab {

/// n-th Laplace-Beltrami eigenvalue on S^2.
inline double sphere_eigenvalue(int degree) { return static_cast<double>(degree) * (degree + 1); }

/// Evaluation cap for the spherical-harmonic basis (factorial ratios overflow far above it).
inline constexpr int kMaxHarmonicDegree = 64;

/// Value and first angular derivatives of a function on S^2 at a point.
struct SphereJet {
    double value = 0.0;
    double d_theta = 0.0;        // d/d(theta)
    double d_phi_over_sin = 0.0; // (1/sin theta) d/d(phi)
};

/// Member of the degree-n eigenspace on S^2, stored as 2n+1 coefficients over the
/// real L2-orthonormal spherical-harmonic basis, indexed m = -n..n.
class Eigenfunction {
public:
    Eigenfunction(int degree, std::vector<double> coeffs);

    /// Basis function Y_n^m: m = 0 zonal, m > 0 the cos(m phi) branch, m < 0 sin(|m| phi).
    static Eigenfunction basis(int degree, int order);

    /// Coefficients of x -> P_n(<x, axis>) via the addition theorem.
    static Eigenfunction zonal_from_axis(const SpherePoint& axis, int degree);

    int degree() const { return degree_; }
    double coeff(int m) const;
    const std::vector<double>& coeffs() const { return coeffs_; }

    double operator()(const SpherePoint& p) const;
    SphereJet jet(const SpherePoint& p) const;

    /// Tangent gradient at p (theta/phi derivatives with metric factors; stable at poles).
    Vec3 surface_gradient(const SpherePoint& p) const;

    /// All 2n+1 basis values at p, indexed m + degree.
    static std::vector<double> basis_values(int degree, const SpherePoint& p);

    /// Basis values together with their angular derivatives.
    static void basis_jets(int degree, const SpherePoint& p,
                           std::vector<double>& value,
                           std::vector<double>& d_theta,
                           std::vector<double>& d_phi_over_sin);

private:
    int degree_;
    std::vector<double> coeffs_;
};

/// Coefficient vector with iid normal entries scaled to unit L2 norm.
Eigenfunction random_eigenfunction(Rng& rng, int degree);

/// |Delta_fd f + n(n+1) f| at p with the (theta, phi) central-difference
/// Laplace-Beltrami operator; O(h^2). Requires p at least 10h away from the poles.
double laplacian_residual(const Eigenfunction& f, const SpherePoint& p, double h);

/// The pair (cos, sin) on the circle R/2piZ, lambda = 1.
struct TorusPair {
    double u(double t) const { return std::cos(t); }
    double v(double t) const { return std::sin(t); }

    /// Grid minimum of u^2 + v^2. Evaluated in extended precision so the double
    /// rounding of cos/sin does not perturb the minimum below 1.
    double min_sum_squares(int grid_points) const;

    /// Grid minimum of max(|u|, |v|).
    double min_max_abs(int grid_points) const;

    /// Number of grid points with max(|u|, |v|) < tol (common-zero scan).
    int common_zero_count(int grid_points, double tol) const;
};

inline TorusPair torus_pair() { return {}; }

/// Point on the unit sphere of C^2.
class S3Point {
public:
    S3Point(std::complex<double> z1, std::complex<double> z2);
    static S3Point normalized(std::complex<double> z1, std::complex<double> z2);
    std::complex<double> z1() const { return z1_; }
    std::complex<double> z2() const { return z2_; }

private:
    std::complex<double> z1_, z2_;
};

S3Point random_s3_point(Rng& rng);

struct S3Triple {
    double u = 0.0, v = 0.0, w = 0.0;
};

/// (|z1|^2 - |z2|^2, Re z1 conj(z2), Im z1 conj(z2)) at p.
S3Triple s3_triple(const S3Point& p);

/// Symmetric quadratic form on R^4 with (z1, z2) = (x1 + i x2, x3 + i x4).
struct QuadForm4 {
    std::array<std::array<double, 4>, 4> m{};

    double trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }
    double eval(const std::array<double, 4>& x) const;

    static QuadForm4 s3_u(); // x1^2 + x2^2 - x3^2 - x4^2
    static QuadForm4 s3_v(); // x1 x3 + x2 x4
    static QuadForm4 s3_w(); // x2 x3 - x1 x4
};

/// A quadratic form is harmonic on R^4 iff its trace vanishes (exact test).
inline bool quadratic_form_harmonic(const QuadForm4& q) { return q.trace() == 0.0; }

/// True iff all three members of the triple are harmonic, i.e. lie in one eigenspace on S^3.
bool s3_harmonicity_check();

/// CSV rows (n, m, coeff), 17 significant digits; reconstructs bit-identically.
void write_eigenfunction_csv(std::ostream& os, const Eigenfunction& f);
Eigenfunction read_eigenfunction_csv(std::istream& is);

} // namespace nodallab
