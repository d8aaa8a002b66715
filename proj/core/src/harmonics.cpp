#include "nodallab/harmonics.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "nodallab/legendre.hpp"

namespace nodallab {

namespace {

void check_harmonic_degree(int n) {
    if (n < 0) throw DomainError("harmonics: negative degree");
    if (n > kMaxHarmonicDegree)
        throw ResourceError("harmonics: degree above evaluation cap " +
                            std::to_string(kMaxHarmonicDegree));
}

// sqrt((2n+1)/(4 pi) * (n-m)!/(n+m)!), with the sqrt(2) of the real basis for m > 0.
double basis_norm(int n, int m) {
    const double lg = std::lgamma(n - m + 1.0) - std::lgamma(n + m + 1.0);
    double f = std::exp(0.5 * (std::log(2.0 * n + 1.0) - std::log(4.0 * kPi) + lg));
    if (m > 0) f *= std::sqrt(2.0);
    return f;
}

struct AngleFrame {
    double x;            // cos(theta)
    double s;            // sin(theta)
    double cphi, sphi;   // cos(phi), sin(phi); (1, 0) at the poles
};

AngleFrame angle_frame(const SpherePoint& p) {
    AngleFrame a;
    a.x = p.z();
    a.s = std::hypot(p.x(), p.y());
    if (a.s > 0.0) {
        a.cphi = p.x() / a.s;
        a.sphi = p.y() / a.s;
    } else {
        a.cphi = 1.0;
        a.sphi = 0.0;
    }
    return a;
}

double pow_int(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

Eigenfunction::Eigenfunction(int degree, std::vector<double> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    check_harmonic_degree(degree);
    if (static_cast<int>(coeffs_.size()) != 2 * degree + 1)
        throw DomainError("Eigenfunction: expected 2n+1 coefficients");
}

Eigenfunction Eigenfunction::basis(int degree, int order) {
    check_harmonic_degree(degree);
    if (order < -degree || order > degree)
        throw DomainError("Eigenfunction::basis: order outside -n..n");
    std::vector<double> c(2 * degree + 1, 0.0);
    c[order + degree] = 1.0;
    return Eigenfunction(degree, std::move(c));
}

double Eigenfunction::coeff(int m) const {
    if (m < -degree_ || m > degree_) throw DomainError("Eigenfunction::coeff: order outside -n..n");
    return coeffs_[m + degree_];
}

std::vector<double> Eigenfunction::basis_values(int degree, const SpherePoint& p) {
    check_harmonic_degree(degree);
    const auto a = angle_frame(p);
    std::vector<double> val(2 * degree + 1, 0.0);

    double cm = 1.0, sm = 0.0; // cos(m phi), sin(m phi)
    for (int m = 0; m <= degree; ++m) {
        if (m > 0) {
            const double c = cm * a.cphi - sm * a.sphi;
            sm = sm * a.cphi + cm * a.sphi;
            cm = c;
        }
        const double theta_part =
            basis_norm(degree, m) * pow_int(a.s, m) * assoc_legendre_parts(degree, m, a.x).reduced;
        if (m == 0) {
            val[degree] = theta_part;
        } else {
            val[degree + m] = theta_part * cm;
            val[degree - m] = theta_part * sm;
        }
    }
    return val;
}

void Eigenfunction::basis_jets(int degree, const SpherePoint& p,
                               std::vector<double>& value,
                               std::vector<double>& d_theta,
                               std::vector<double>& d_phi_over_sin) {
    check_harmonic_degree(degree);
    const auto a = angle_frame(p);
    const int size = 2 * degree + 1;
    value.assign(size, 0.0);
    d_theta.assign(size, 0.0);
    d_phi_over_sin.assign(size, 0.0);

    double cm = 1.0, sm = 0.0;
    for (int m = 0; m <= degree; ++m) {
        if (m > 0) {
            const double c = cm * a.cphi - sm * a.sphi;
            sm = sm * a.cphi + cm * a.sphi;
            cm = c;
        }
        const auto parts = assoc_legendre_parts(degree, m, a.x);
        const double norm = basis_norm(degree, m);
        if (m == 0) {
            value[degree] = norm * parts.reduced;
            d_theta[degree] = -norm * a.s * parts.reduced_deriv;
            // d_phi term vanishes
        } else {
            const double sm1 = pow_int(a.s, m - 1); // sin^{m-1}
            const double theta_part = norm * sm1 * a.s * parts.reduced;
            // d/d(theta) of sin^m * p(cos theta) = sin^{m-1} (m cos p - sin^2 p').
            const double dtheta =
                norm * sm1 * (m * a.x * parts.reduced - a.s * a.s * parts.reduced_deriv);
            const double dphi_os = norm * sm1 * m * parts.reduced;
            value[degree + m] = theta_part * cm;
            value[degree - m] = theta_part * sm;
            d_theta[degree + m] = dtheta * cm;
            d_theta[degree - m] = dtheta * sm;
            d_phi_over_sin[degree + m] = -dphi_os * sm;
            d_phi_over_sin[degree - m] = dphi_os * cm;
        }
    }
}

double Eigenfunction::operator()(const SpherePoint& p) const {
    const auto val = basis_values(degree_, p);
    double acc = 0.0;
    for (int i = 0; i < static_cast<int>(val.size()); ++i) acc += coeffs_[i] * val[i];
    return acc;
}

SphereJet Eigenfunction::jet(const SpherePoint& p) const {
    static thread_local std::vector<double> v, dt, dp;
    basis_jets(degree_, p, v, dt, dp);
    SphereJet j;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        j.value += coeffs_[i] * v[i];
        j.d_theta += coeffs_[i] * dt[i];
        j.d_phi_over_sin += coeffs_[i] * dp[i];
    }
    return j;
}

Vec3 Eigenfunction::surface_gradient(const SpherePoint& p) const {
    const auto a = angle_frame(p);
    const SphereJet j = jet(p);
    const Vec3 e_theta{a.x * a.cphi, a.x * a.sphi, -a.s};
    const Vec3 e_phi{-a.sphi, a.cphi, 0.0};
    return e_theta * j.d_theta + e_phi * j.d_phi_over_sin;
}

Eigenfunction Eigenfunction::zonal_from_axis(const SpherePoint& axis, int degree) {
    check_harmonic_degree(degree);
    if (degree < 0) throw DomainError("zonal_from_axis: degree must be >= 0");
    auto c = basis_values(degree, axis);
    const double scale = 4.0 * kPi / (2.0 * degree + 1.0);
    for (auto& ci : c) ci *= scale;
    return Eigenfunction(degree, std::move(c));
}

Eigenfunction random_eigenfunction(Rng& rng, int degree) {
    std::vector<double> c(2 * degree + 1);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto& ci : c) {
            ci = rng.normal();
            n2 += ci * ci;
        }
    } while (n2 < 1e-12);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& ci : c) ci *= inv;
    return Eigenfunction(degree, std::move(c));
}

double laplacian_residual(const Eigenfunction& f, const SpherePoint& p, double h) {
    if (h <= 0.0) throw DomainError("laplacian_residual: step must be positive");
    const double theta = p.theta(), phi = p.phi();
    if (theta < 10.0 * h || theta > kPi - 10.0 * h)
        throw PoleProximityError("laplacian_residual: point within 10h of a pole");

    const auto at = [&](double t, double q) { return f(SpherePoint::from_angles(t, q)); };
    const double f0 = at(theta, phi);
    const double ftp = at(theta + h, phi), ftm = at(theta - h, phi);
    const double fpp = at(theta, phi + h), fpm = at(theta, phi - h);

    const double u_tt = (ftp - 2.0 * f0 + ftm) / (h * h);
    const double u_t = (ftp - ftm) / (2.0 * h);
    const double u_pp = (fpp - 2.0 * f0 + fpm) / (h * h);
    const double s = std::sin(theta);
    const double lap = u_tt + (std::cos(theta) / s) * u_t + u_pp / (s * s);
    return std::abs(lap + sphere_eigenvalue(f.degree()) * f0);
}

double TorusPair::min_sum_squares(int grid_points) const {
    if (grid_points < 1) throw DomainError("min_sum_squares: empty grid");
    long double best = 4.0L;
    for (int i = 0; i < grid_points; ++i) {
        const long double t = 2.0L * kPi * i / grid_points;
        const long double c = cosl(t), s = sinl(t);
        best = std::min(best, c * c + s * s);
    }
    return static_cast<double>(best);
}

double TorusPair::min_max_abs(int grid_points) const {
    if (grid_points < 1) throw DomainError("min_max_abs: empty grid");
    double best = 2.0;
    for (int i = 0; i < grid_points; ++i) {
        const double t = 2.0 * kPi * i / grid_points;
        best = std::min(best, std::max(std::abs(u(t)), std::abs(v(t))));
    }
    return best;
}

int TorusPair::common_zero_count(int grid_points, double tol) const {
    int count = 0;
    for (int i = 0; i < grid_points; ++i) {
        const double t = 2.0 * kPi * i / grid_points;
        if (std::max(std::abs(u(t)), std::abs(v(t))) < tol) ++count;
    }
    return count;
}

S3Point::S3Point(std::complex<double> z1, std::complex<double> z2) : z1_(z1), z2_(z2) {
    if (std::abs(std::norm(z1) + std::norm(z2) - 1.0) > 2.0e-14)
        throw DomainError("S3Point: not on the unit sphere of C^2");
}

S3Point S3Point::normalized(std::complex<double> z1, std::complex<double> z2) {
    const double n = std::sqrt(std::norm(z1) + std::norm(z2));
    if (n == 0.0) throw DomainError("S3Point: zero vector");
    return S3Point(z1 / n, z2 / n);
}

S3Point random_s3_point(Rng& rng) {
    const auto q = rng.unit_quaternion();
    return S3Point({q[0], q[1]}, {q[2], q[3]});
}

S3Triple s3_triple(const S3Point& p) {
    const auto z1 = p.z1(), z2 = p.z2();
    const std::complex<double> cr = z1 * std::conj(z2);
    return {std::norm(z1) - std::norm(z2), cr.real(), cr.imag()};
}

double QuadForm4::eval(const std::array<double, 4>& x) const {
    double acc = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += m[i][j] * x[i] * x[j];
    return acc;
}

QuadForm4 QuadForm4::s3_u() {
    QuadForm4 q;
    q.m[0][0] = 1.0;
    q.m[1][1] = 1.0;
    q.m[2][2] = -1.0;
    q.m[3][3] = -1.0;
    return q;
}

QuadForm4 QuadForm4::s3_v() {
    QuadForm4 q;
    q.m[0][2] = q.m[2][0] = 0.5;
    q.m[1][3] = q.m[3][1] = 0.5;
    return q;
}

QuadForm4 QuadForm4::s3_w() {
    QuadForm4 q;
    q.m[1][2] = q.m[2][1] = 0.5;
    q.m[0][3] = q.m[3][0] = -0.5;
    return q;
}

bool s3_harmonicity_check() {
    return quadratic_form_harmonic(QuadForm4::s3_u()) &&
           quadratic_form_harmonic(QuadForm4::s3_v()) &&
           quadratic_form_harmonic(QuadForm4::s3_w());
}

void write_eigenfunction_csv(std::ostream& os, const Eigenfunction& f) {
    os << "n,m,coeff\n";
    char buf[64];
    for (int m = -f.degree(); m <= f.degree(); ++m) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", f.degree(), m, f.coeff(m));
        os << buf;
    }
}

Eigenfunction read_eigenfunction_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("n,m,coeff", 0) != 0)
        throw DomainError("read_eigenfunction_csv: missing header");
    int degree = -1;
    std::vector<double> coeffs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        int n = 0, m = 0;
        char comma = 0;
        double c = 0.0;
        ss >> n >> comma >> m >> comma >> c;
        if (!ss) throw DomainError("read_eigenfunction_csv: malformed row '" + line + "'");
        if (degree < 0) {
            degree = n;
            coeffs.assign(2 * degree + 1, 0.0);
        }
        if (n != degree || m < -degree || m > degree)
            throw DomainError("read_eigenfunction_csv: inconsistent row '" + line + "'");
        coeffs[m + degree] = c;
    }
    if (degree < 0) throw DomainError("read_eigenfunction_csv: no rows");
    return Eigenfunction(degree, std::move(coeffs));
}

} // namespace nodallab
