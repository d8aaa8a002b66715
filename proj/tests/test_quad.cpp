#include <doctest.h>

#include <cmath>

#include "nodallab/quad.hpp"
#include "nodallab/random.hpp"

using namespace nodallab;

TEST_CASE("gauss rule: midpoint, exactness, Legendre normalization") {
    const auto& r1 = gauss_rule(1);
    REQUIRE(r1.nodes.size() == 1);
    CHECK(std::abs(r1.nodes[0]) < 1e-15);
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const auto& r2 = gauss_rule(2);
    CHECK(gauss_integrate(r2, -1.0, 1.0, [](double x) { return x * x; }) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    const auto& r30 = gauss_rule(30);
    const double p20sq = gauss_integrate(r30, -1.0, 1.0, [](double x) {
        const double p = legendre_eval(20, x);
        return p * p;
    });
    CHECK(std::abs(p20sq - 2.0 / 41.0) < 1e-13);

    for (int order : {1, 5, 40, 200}) {
        const auto& r = gauss_rule(order);
        double wsum = 0.0;
        for (double w : r.weights) {
            CHECK(w > 0.0);
            wsum += w;
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-13));
    }
    CHECK_THROWS_AS(gauss_rule(0), DomainError);
    CHECK_THROWS_AS(gauss_rule(kMaxGaussOrder + 1), DomainError);
}

TEST_CASE("gauss exactness on random polynomials of degree 2*order-1") {
    Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = 2 + static_cast<int>(rng.uniform() * 20);
        std::vector<double> coef(2 * order); // degree 2*order-1
        for (auto& c : coef) c = rng.uniform(-1.0, 1.0);
        const auto poly = [&](double x) {
            double acc = 0.0;
            for (int k = static_cast<int>(coef.size()) - 1; k >= 0; --k) acc = acc * x + coef[k];
            return acc;
        };
        // oracle: antiderivative evaluated at the endpoints
        double exact = 0.0;
        for (std::size_t k = 0; k < coef.size(); ++k)
            exact += coef[k] * (1.0 - std::pow(-1.0, k + 1)) / (k + 1);
        const double quad = gauss_integrate(gauss_rule(order), -1.0, 1.0, poly);
        CHECK(std::abs(quad - exact) < 1e-12);
    }
}

TEST_CASE("zonal bands partition the colatitude range") {
    for (int n : {1, 3, 10}) {
        const auto bands = zonal_bands(n);
        REQUIRE(static_cast<int>(bands.size()) == n + 1);
        for (std::size_t i = 0; i < bands.size(); ++i) {
            CHECK(bands[i].theta_lo < bands[i].theta_hi);
            if (i > 0) CHECK(bands[i].theta_lo == doctest::Approx(bands[i - 1].theta_hi));
        }
        // interior boundaries are the zeros of P_n(cos theta)
        for (std::size_t i = 0; i + 1 < bands.size(); ++i)
            CHECK(std::abs(legendre_eval(n, std::cos(bands[i].theta_hi))) < 1e-13);
    }
    CHECK_THROWS_AS(Band(1.0, 0.5), DomainError);
}

TEST_CASE("Dirichlet band identity: equality case across all bands") {
    const auto polar = dirichlet_band_identity(1, 1);
    CHECK(polar.residual < 1e-12);

    for (int k = 1; k <= 4; ++k) CHECK(dirichlet_band_identity(3, k).residual < 1e-10);

    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= n + 1; ++k) CHECK(dirichlet_band_identity(n, k).residual < 1e-10);

    CHECK_THROWS_AS(dirichlet_band_identity(3, 0), DomainError);
    CHECK_THROWS_AS(dirichlet_band_identity(3, 5), DomainError);
}

TEST_CASE("strict inequality for non-eigenfunctions on the band") {
    for (int n : {1, 2, 5, 12, 20}) {
        const double lambda = sphere_eigenvalue(n);
        for (const auto& b : zonal_bands(n)) {
            // truncated P_{n+1}(cos theta)
            const auto e = zonal_band_energy(
                b, [n](double t) { return legendre_eval(n + 1, std::cos(t)); },
                [n](double t) { return -std::sin(t) * legendre_deriv(n + 1, std::cos(t)); });
            CHECK(e.dirichlet > lambda * e.l2);

            // a bump vanishing on the band boundary
            const double xa = std::cos(b.theta_hi), xb = std::cos(b.theta_lo);
            const auto eb = zonal_band_energy(
                b, [xa, xb](double t) { const double x = std::cos(t); return (x - xa) * (xb - x); },
                [xa, xb](double t) {
                    const double x = std::cos(t);
                    return -std::sin(t) * (xa + xb - 2 * x);
                });
            CHECK(eb.dirichlet > lambda * eb.l2);
        }
    }
}

TEST_CASE("Green formula residuals") {
    // same degree: both sides vanish identically
    Rng rng(72);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform() * 6);
        const auto u = random_eigenfunction(rng, n);
        const auto v = random_eigenfunction(rng, n);
        const Band b{rng.uniform(0.2, 1.2), rng.uniform(1.5, 2.9)};
        CHECK(green_residual(b, u, v) < 1e-12);
    }

    CHECK(green_residual(Band{0.5, 1.5}, Eigenfunction::basis(2, 0), Eigenfunction::basis(4, 0)) <
          1e-10);

    for (int trial = 0; trial < 50; ++trial) {
        const int lu = static_cast<int>(rng.uniform() * 9);
        const int lv = static_cast<int>(rng.uniform() * 9);
        const auto u = random_eigenfunction(rng, lu);
        const auto v = random_eigenfunction(rng, lv);
        const double lo = rng.uniform(0.1, 1.4);
        const Band b{lo, lo + rng.uniform(0.3, 1.5)};
        CHECK(green_residual(b, u, v) < 1e-10);
    }
}

TEST_CASE("Green formula over the whole sphere: both terms vanish for distinct degrees") {
    const auto u = Eigenfunction::basis(2, 1);
    const auto v = Eigenfunction::basis(4, -2);
    double prev_boundary = 1.0;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        const Band full{eps, kPi - eps};
        const int nphi = 64;
        double boundary = 0.0;
        for (int side = 0; side < 2; ++side) {
            const double theta = side == 0 ? full.theta_lo : full.theta_hi;
            const double orient = side == 0 ? -1.0 : 1.0;
            double row = 0.0;
            for (int j = 0; j < nphi; ++j) {
                const auto p = SpherePoint::from_angles(theta, 2.0 * kPi * j / nphi);
                const auto ju = u.jet(p), jv = v.jet(p);
                row += ju.value * jv.d_theta - jv.value * ju.d_theta;
            }
            boundary += orient * row * (2.0 * kPi / nphi) * std::sin(theta);
        }
        CHECK(std::abs(boundary) < prev_boundary + 1e-15); // shrinks with the caps
        prev_boundary = std::abs(boundary);
        CHECK(green_residual(full, u, v) < 1e-10);
    }
    CHECK(prev_boundary < 1e-8);
}

TEST_CASE("integration-by-parts identity with a compact-support cutoff") {
    const Band b{0.4, 2.6};

    // u identically zero
    const Eigenfunction zero(3, std::vector<double>(7, 0.0));
    Rng rng(73);
    const auto v3 = random_eigenfunction(rng, 3);
    const auto w2 = random_eigenfunction(rng, 2);
    CHECK(bpart_residual(b, zero, v3, w2) == 0.0);

    // constant w: dw = 0 and Delta w = 0
    const auto u4 = random_eigenfunction(rng, 4);
    const Eigenfunction wconst(0, {1.0});
    CHECK(bpart_residual(b, u4, v3, wconst) < 1e-14);

    // random triples at the documented width and order
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = random_eigenfunction(rng, 1 + static_cast<int>(rng.uniform() * 5));
        const auto v = random_eigenfunction(rng, 1 + static_cast<int>(rng.uniform() * 5));
        const auto w = random_eigenfunction(rng, 1 + static_cast<int>(rng.uniform() * 5));
        CHECK(bpart_residual(b, u, v, w, 0.2, 96) < 1e-8);
    }
    CHECK_THROWS_AS(bpart_residual(Band{0.4, 0.7}, u4, v3, w2, 0.2), DomainError);
}

TEST_CASE("eigenvalue positivity: Dirichlet ratio equals n(n+1)") {
    CHECK(dirichlet_l2_ratio(0, 0) == doctest::Approx(0.0).epsilon(1e-12));
    for (int m = -1; m <= 1; ++m)
        CHECK(std::abs(dirichlet_l2_ratio(1, m) - 2.0) < 1e-10);
    for (int m : {-7, -3, 0, 4, 7}) CHECK(std::abs(dirichlet_l2_ratio(7, m) - 56.0) < 1e-9);
    for (int n : {0, 1, 2, 7, 11}) CHECK(eigenvalue_positivity_check(n));
}

TEST_CASE("quadrature convergence: doubling the order keeps residuals at the floor") {
    Rng rng(74);
    const auto u = random_eigenfunction(rng, 5);
    const auto v = random_eigenfunction(rng, 3);
    const auto w = random_eigenfunction(rng, 4);
    const Band b{0.5, 2.5};
    const double r1 = bpart_residual(b, u, v, w, 0.3, 48);
    const double r2 = bpart_residual(b, u, v, w, 0.3, 96);
    CHECK((r2 <= r1 || r2 < 1e-12));
    const double g1 = green_residual(b, u, v, 32);
    const double g2 = green_residual(b, u, v, 64);
    CHECK((g2 <= g1 || g2 < 1e-12));
}
