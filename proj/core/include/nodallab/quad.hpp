#pragma once

#include <functional>
#include <vector>

#include "nodallab/harmonics.hpp"
#include "nodallab/legendre.hpp"

namespace nodallab {

inline constexpr int kMaxGaussOrder = 200;

/// Gauss-Legendre nodes and weights on [-1, 1]; exact on polynomials of degree 2*order-1.
struct GaussRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule; nodes are the Legendre zeros, weights w_i = 2 / ((1-x_i^2) P'(x_i)^2).
const GaussRule& gauss_rule(int order);

double gauss_integrate(const GaussRule& rule, double a, double b,
                       const std::function<double(double)>& f);

/// Zonal band {theta in (lo, hi)} on S^2, bounded by constant-colatitude circles.
struct Band {
    double theta_lo = 0.0;
    double theta_hi = 0.0;

    Band(double lo, double hi) : theta_lo(lo), theta_hi(hi) {
        if (!(0.0 <= lo && lo < hi && hi <= kPi))
            throw DomainError("Band: need 0 <= lo < hi <= pi");
    }
};

/// The n+1 bands cut by the nodal circles of P_n(cos theta); poles inset by 1e-8
/// (coordinate singularity, not a geometric boundary).
std::vector<Band> zonal_bands(int degree);

struct BandIdentityResult {
    double lhs = 0.0;      // Dirichlet energy of the band's own eigenfunction
    double rhs = 0.0;      // n(n+1) * L2 norm squared
    double residual = 0.0; // |lhs - rhs| / rhs
};

/// Equality case on band k (1-based): the eigenfunction vanishing on the band
/// boundary has Dirichlet energy exactly lambda * its L2 norm.
BandIdentityResult dirichlet_band_identity(int degree, int band_index, int order = 64);

struct ZonalEnergy {
    double dirichlet = 0.0; // 2 pi Int g'(theta)^2 sin theta dtheta
    double l2 = 0.0;        // 2 pi Int g(theta)^2 sin theta dtheta
};

/// Energies of an arbitrary zonal profile g over a band (strict-inequality checks).
ZonalEnergy zonal_band_energy(const Band& band, const std::function<double(double)>& g,
                              const std::function<double(double)>& dg, int order = 128);

/// | boundary term - bulk term | of the Green formula over a band, with d/dn = +-d/dtheta
/// on the boundary circles and Delta acting analytically.
double green_residual(const Band& band, const Eigenfunction& u, const Eigenfunction& v,
                      int order = 64);

/// Residual of the integration-by-parts identity with u forced to compact support by a
/// C^2 quintic-smoothstep cutoff in theta (width on each side).
double bpart_residual(const Band& band, const Eigenfunction& u, const Eigenfunction& v,
                      const Eigenfunction& w, double cutoff_width = 0.2, int order = 96);

/// Dirichlet energy / L2 norm ratio for the basis function Y_n^m over the whole sphere.
double dirichlet_l2_ratio(int degree, int order_m);

/// True iff the Dirichlet energy of every Y_n^m equals n(n+1) times its norm (>= 0).
bool eigenvalue_positivity_check(int degree);

} // namespace nodallab
