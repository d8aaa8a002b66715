#include "nodallab/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace nodallab {

const GaussRule& gauss_rule(int order) {
    if (order < 1 || order > kMaxGaussOrder)
        throw DomainError("gauss_rule: order outside 1..200");

    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[order];
    if (!slot) {
        auto rule = std::make_unique<GaussRule>();
        rule->order = order;
        rule->nodes = legendre_zeros(order).zeros;
        rule->weights.resize(order);
        for (int i = 0; i < order; ++i) {
            const double x = rule->nodes[i];
            const double dp = legendre_deriv(order, x);
            rule->weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        slot = std::move(rule);
    }
    return *slot;
}

double gauss_integrate(const GaussRule& rule, double a, double b,
                       const std::function<double(double)>& f) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < rule.order; ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

std::vector<Band> zonal_bands(int degree) {
    const double eps = 1e-8;
    const auto z = legendre_zeros(degree).zeros; // ascending in x
    std::vector<double> thetas;
    thetas.push_back(eps);
    for (int i = degree - 1; i >= 0; --i) thetas.push_back(std::acos(z[i])); // ascending in theta
    thetas.push_back(kPi - eps);
    std::vector<Band> bands;
    bands.reserve(degree + 1);
    for (std::size_t i = 0; i + 1 < thetas.size(); ++i) bands.emplace_back(thetas[i], thetas[i + 1]);
    return bands;
}

BandIdentityResult dirichlet_band_identity(int degree, int band_index, int order) {
    const auto bands = zonal_bands(degree);
    if (band_index < 1 || band_index > static_cast<int>(bands.size()))
        throw DomainError("dirichlet_band_identity: band index outside 1..n+1");
    const Band& band = bands[band_index - 1];
    const double x_lo = std::cos(band.theta_hi), x_hi = std::cos(band.theta_lo);

    const auto& rule = gauss_rule(order);
    const double lhs =
        2.0 * kPi * gauss_integrate(rule, x_lo, x_hi, [degree](double x) {
            const double dp = legendre_deriv(degree, x);
            return (1.0 - x * x) * dp * dp;
        });
    const double l2 = 2.0 * kPi * gauss_integrate(rule, x_lo, x_hi, [degree](double x) {
        const double p = legendre_eval(degree, x);
        return p * p;
    });
    BandIdentityResult r;
    r.lhs = lhs;
    r.rhs = sphere_eigenvalue(degree) * l2;
    r.residual = std::abs(r.lhs - r.rhs) / r.rhs;
    return r;
}

ZonalEnergy zonal_band_energy(const Band& band, const std::function<double(double)>& g,
                              const std::function<double(double)>& dg, int order) {
    const auto& rule = gauss_rule(order);
    ZonalEnergy e;
    e.dirichlet = 2.0 * kPi * gauss_integrate(rule, band.theta_lo, band.theta_hi,
                                              [&](double t) {
                                                  const double d = dg(t);
                                                  return d * d * std::sin(t);
                                              });
    e.l2 = 2.0 * kPi * gauss_integrate(rule, band.theta_lo, band.theta_hi, [&](double t) {
        const double v = g(t);
        return v * v * std::sin(t);
    });
    return e;
}

namespace {

// Int over the band of f(theta, phi) sin(theta) dtheta dphi; Gauss in cos(theta)
// crossed with a trapezoid in phi (spectrally accurate for trigonometric integrands).
double band_surface_integral(const Band& band, int order, int nphi,
                             const std::function<double(double, double)>& f) {
    const auto& rule = gauss_rule(order);
    const double x_lo = std::cos(band.theta_hi), x_hi = std::cos(band.theta_lo);
    return gauss_integrate(rule, x_lo, x_hi, [&](double x) {
        const double theta = std::acos(std::clamp(x, -1.0, 1.0));
        double acc = 0.0;
        for (int j = 0; j < nphi; ++j) acc += f(theta, 2.0 * kPi * j / nphi);
        return acc * (2.0 * kPi / nphi);
    });
}

double circle_integral(double theta, int nphi, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (int j = 0; j < nphi; ++j) acc += f(2.0 * kPi * j / nphi);
    return acc * (2.0 * kPi / nphi) * std::sin(theta);
}

} // namespace

double green_residual(const Band& band, const Eigenfunction& u, const Eigenfunction& v,
                      int order) {
    const int nphi = 4 * (u.degree() + v.degree()) + 16;

    // Boundary: outer normal is -d/dtheta on the low circle, +d/dtheta on the high one.
    double boundary = 0.0;
    for (int side = 0; side < 2; ++side) {
        const double theta = side == 0 ? band.theta_lo : band.theta_hi;
        const double orient = side == 0 ? -1.0 : 1.0;
        boundary += orient * circle_integral(theta, nphi, [&](double phi) {
            const auto p = SpherePoint::from_angles(theta, phi);
            const SphereJet ju = u.jet(p), jv = v.jet(p);
            return ju.value * jv.d_theta - jv.value * ju.d_theta;
        });
    }

    // Bulk: u Delta v - v Delta u = (lambda_u - lambda_v) u v analytically.
    const double dl = sphere_eigenvalue(u.degree()) - sphere_eigenvalue(v.degree());
    const double bulk = dl * band_surface_integral(band, order, nphi, [&](double theta, double phi) {
        const auto p = SpherePoint::from_angles(theta, phi);
        return u(p) * v(p);
    });
    return std::abs(boundary - bulk);
}

namespace {

// C^2 quintic smoothstep: 0 at 0, 1 at 1, vanishing first and second derivatives.
double smoothstep5(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }
double smoothstep5_deriv(double t) { return t * t * (30.0 + t * (-60.0 + 30.0 * t)); }

struct Cutoff {
    double lo, hi, width;
    double value(double theta) const {
        if (theta <= lo || theta >= hi) return 0.0;
        if (theta < lo + width) return smoothstep5((theta - lo) / width);
        if (theta > hi - width) return smoothstep5((hi - theta) / width);
        return 1.0;
    }
    double deriv(double theta) const {
        if (theta <= lo || theta >= hi) return 0.0;
        if (theta < lo + width) return smoothstep5_deriv((theta - lo) / width) / width;
        if (theta > hi - width) return -smoothstep5_deriv((hi - theta) / width) / width;
        return 0.0;
    }
};

} // namespace

double bpart_residual(const Band& band, const Eigenfunction& u, const Eigenfunction& v,
                      const Eigenfunction& w, double cutoff_width, int order) {
    const double span = band.theta_hi - band.theta_lo;
    if (cutoff_width <= 0.0 || 2.0 * cutoff_width >= span)
        throw DomainError("bpart_residual: cutoff width must fit inside the band");
    const Cutoff chi{band.theta_lo, band.theta_hi, cutoff_width};
    const int nphi = 4 * (u.degree() + v.degree() + w.degree()) + 16;
    const double lambda_w = sphere_eigenvalue(w.degree());

    // rho(df, dg) = f_theta g_theta + (f_phi / sin)(g_phi / sin); for u_c = chi * u the
    // theta component picks up chi' u.
    const auto integrand = [&](double theta, double phi) {
        const auto p = SpherePoint::from_angles(theta, phi);
        const SphereJet ju = u.jet(p), jv = v.jet(p), jw = w.jet(p);
        const double cv = chi.value(theta), cd = chi.deriv(theta);
        const double uc = cv * ju.value;
        const double uc_theta = cv * ju.d_theta + cd * ju.value;
        const double uc_phi_os = cv * ju.d_phi_over_sin;

        const double rho_v_w = jv.d_theta * jw.d_theta + jv.d_phi_over_sin * jw.d_phi_over_sin;
        const double rho_uc_w = uc_theta * jw.d_theta + uc_phi_os * jw.d_phi_over_sin;
        const double left = uc * rho_v_w;
        const double right = jv.value * (rho_uc_w + uc * (-lambda_w * jw.value));
        return left + right; // identity: left = -right
    };

    // Integrate piecewise at the cutoff knots so each piece is smooth.
    const double knots[4] = {band.theta_lo, band.theta_lo + cutoff_width,
                             band.theta_hi - cutoff_width, band.theta_hi};
    double acc = 0.0;
    for (int piece = 0; piece < 3; ++piece)
        acc += band_surface_integral(Band(knots[piece], knots[piece + 1]), order, nphi, integrand);
    return std::abs(acc);
}

double dirichlet_l2_ratio(int degree, int order_m) {
    const auto f = Eigenfunction::basis(degree, order_m);
    const int order = degree + 4;
    const int nphi = 4 * degree + 8;
    const Band full(1e-9, kPi - 1e-9);
    const double energy = band_surface_integral(full, order, nphi, [&](double theta, double phi) {
        const SphereJet j = f.jet(SpherePoint::from_angles(theta, phi));
        return j.d_theta * j.d_theta + j.d_phi_over_sin * j.d_phi_over_sin;
    });
    const double l2 = band_surface_integral(full, order, nphi, [&](double theta, double phi) {
        const double val = f(SpherePoint::from_angles(theta, phi));
        return val * val;
    });
    return energy / l2;
}

bool eigenvalue_positivity_check(int degree) {
    const double lambda = sphere_eigenvalue(degree);
    for (int m = -degree; m <= degree; ++m) {
        const double ratio = dirichlet_l2_ratio(degree, m);
        if (ratio < -1e-10) return false;
        if (std::abs(ratio - lambda) > 1e-9 * (lambda + 1.0)) return false;
    }
    return true;
}

} // namespace nodallab
