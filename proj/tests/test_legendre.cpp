#include <doctest.h>

#include <cmath>

#include "nodallab/geometry.hpp"
#include "nodallab/legendre.hpp"
#include "nodallab/quad.hpp"
#include "nodallab/random.hpp"

using namespace nodallab;

TEST_CASE("legendre_eval low-degree values") {
    CHECK(legendre_eval(0, 0.3) == 1.0);
    CHECK(legendre_eval(5, 1.0) == 1.0);
    // closed form (5x^3 - 3x)/2 at x = 0.5
    CHECK(legendre_eval(3, 0.5) == doctest::Approx(-0.4375).epsilon(1e-15));
    CHECK_THROWS_AS(legendre_eval(3, 1.0000001), DomainError);
    CHECK_THROWS_AS(legendre_eval(-1, 0.0), DomainError);
}

TEST_CASE("legendre_eval stays bounded by 1") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng.uniform() * 200);
        const double x = rng.uniform(-1.0, 1.0);
        CHECK(std::abs(legendre_eval(n, x)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("legendre_deriv identities and finite-difference oracle") {
    CHECK(legendre_deriv(1, 0.7) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(legendre_deriv(2, 0.0) == doctest::Approx(0.0).epsilon(1e-15));

    const double h = 1e-5;
    const double fd = (legendre_eval(3, 0.5 + h) - legendre_eval(3, 0.5 - h)) / (2 * h);
    CHECK(std::abs(legendre_deriv(3, 0.5) - fd) < 1e-7);

    // Degree and range kept where the central-difference truncation h^2 P'''/6
    // itself stays below the tolerance.
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + static_cast<int>(rng.uniform() * 12);
        const double x = rng.uniform(-0.85, 0.85);
        const double fd2 = (legendre_eval(n, x + h) - legendre_eval(n, x - h)) / (2 * h);
        CHECK(std::abs(legendre_deriv(n, x) - fd2) < 1e-6);
    }
    CHECK_THROWS_AS(legendre_deriv(4, 1.0), DomainError);
}

TEST_CASE("recurrence consistency on random samples") {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng.uniform() * 99);
        const double x = rng.uniform(-1.0, 1.0);
        const double lhs = (n + 1) * legendre_eval(n + 1, x) -
                           (2 * n + 1) * x * legendre_eval(n, x) + n * legendre_eval(n - 1, x);
        CHECK(std::abs(lhs) < 1e-12);
    }
}

TEST_CASE("legendre_zeros small degrees") {
    const auto z1 = legendre_zeros(1);
    REQUIRE(z1.zeros.size() == 1);
    CHECK(std::abs(z1.zeros[0]) < 1e-15);

    const auto z2 = legendre_zeros(2);
    REQUIRE(z2.zeros.size() == 2);
    CHECK(z2.zeros[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(z2.zeros[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));

    CHECK_THROWS_AS(legendre_zeros(0), DomainError);
    CHECK_THROWS_AS(legendre_zeros(kMaxLegendreDegree + 1), DomainError);
}

TEST_CASE("legendre_zeros residuals, ordering, symmetry") {
    for (int n : {5, 50, 100}) {
        const auto z = legendre_zeros(n);
        REQUIRE(static_cast<int>(z.zeros.size()) == n);
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(legendre_eval(n, z.zeros[i])) < 1e-13);
            CHECK(z.zeros[i] > -1.0);
            CHECK(z.zeros[i] < 1.0);
            if (i > 0) CHECK(z.zeros[i] > z.zeros[i - 1]);
            CHECK(std::abs(z.zeros[i] + z.zeros[n - 1 - i]) < 1e-14);
        }
    }
    // Past n ~ 150 the edge roots sit on the double-precision conditioning floor
    // |P'| * ulp(x); certify against it instead of the flat 1e-13.
    for (int n : {200, 500}) {
        const auto z = legendre_zeros(n);
        for (int i = 0; i < n; ++i) {
            const double x = z.zeros[i];
            const double bound =
                std::max(1e-13, 4.0 * (std::abs(legendre_deriv(n, x)) * std::abs(x) + n) * 2.3e-16);
            CHECK(std::abs(legendre_eval(n, x)) < bound);
            CHECK(std::abs(z.zeros[i] + z.zeros[n - 1 - i]) < 1e-14);
        }
    }
}

TEST_CASE("zeros of consecutive degrees interlace for every n <= 200") {
    auto prev = legendre_zeros(1).zeros;
    bool ok = true;
    for (int n = 1; n <= 200; ++n) {
        const auto next = legendre_zeros(n + 1).zeros;
        for (int i = 0; i < n; ++i)
            if (!(next[i] < prev[i] && prev[i] < next[i + 1])) ok = false;
        prev = next;
    }
    CHECK(ok);
}

TEST_CASE("orthogonality under Gauss quadrature") {
    const auto& rule = gauss_rule(40);
    for (int m = 0; m <= 30; m += 5) {
        for (int n = m; n <= 30; n += 5) {
            double acc = 0.0;
            for (int i = 0; i < rule.order; ++i)
                acc += rule.weights[i] * legendre_eval(m, rule.nodes[i]) *
                       legendre_eval(n, rule.nodes[i]);
            if (m == n)
                CHECK(std::abs(acc - 2.0 / (2 * n + 1)) < 1e-12);
            else
                CHECK(std::abs(acc) < 1e-12);
        }
    }
}

TEST_CASE("zero distribution: arccos equidistributes, x does not") {
    // Kolmogorov-style distance of the empirical CDF from uniform. The arccosines of
    // the zeros spread uniformly over (0, pi); the zeros themselves pile up near the
    // endpoints (arcsine law), so a uniform fit in x fails by a wide margin.
    const int n = 300;
    const auto z = legendre_zeros(n).zeros;
    double d_theta = 0.0, d_x = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ecdf = (i + 0.5) / n;
        const double theta_cdf = 1.0 - std::acos(z[i]) / kPi; // ascending in x
        d_theta = std::max(d_theta, std::abs(theta_cdf - ecdf));
        const double x_cdf = (z[i] + 1.0) / 2.0;
        d_x = std::max(d_x, std::abs(x_cdf - ecdf));
    }
    CHECK(d_theta < 1.0 / n);
    CHECK(d_x > 0.1);
}

TEST_CASE("associated Legendre values and conventions") {
    CHECK(assoc_legendre_eval(2, 0, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(assoc_legendre_eval(1, 1, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(assoc_legendre_eval(2, 1, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    // no Condon-Shortley phase: positive just below x = 1
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) CHECK(assoc_legendre_eval(n, k, 0.999) > 0.0);
    CHECK_THROWS_AS(assoc_legendre_eval(2, 3, 0.0), DomainError);
    CHECK_THROWS_AS(assoc_legendre_eval(2, -1, 0.0), DomainError);
    CHECK_THROWS_AS(assoc_legendre_eval(2, 1, 1.5), DomainError);
}

TEST_CASE("assoc_legendre_parts derivative matches finite differences") {
    Rng rng(14);
    const double h = 1e-6;
    for (int i = 0; i < 60; ++i) {
        const int n = 1 + static_cast<int>(rng.uniform() * 20);
        const int k = static_cast<int>(rng.uniform() * (n + 1));
        const double x = rng.uniform(-0.9, 0.9);
        const auto p = assoc_legendre_parts(n, k, x);
        const double fd =
            (assoc_legendre_parts(n, k, x + h).reduced - assoc_legendre_parts(n, k, x - h).reduced) /
            (2 * h);
        CHECK(std::abs(p.reduced_deriv - fd) < 1e-5 * std::max(1.0, std::abs(fd)));
    }
}
