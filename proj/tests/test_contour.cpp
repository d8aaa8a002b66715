#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nodallab/contour.hpp"
#include "nodallab/incidence.hpp"

using namespace nodallab;

TEST_CASE("trace_zonal_contour: equator geometry and residuals") {
    const SpherePoint ez{Vec3{0, 0, 1}};
    const auto eq = trace_zonal_contour({ez, 0.0}, 360, 1);
    REQUIRE(eq.vertices().size() == 360);
    for (const auto& p : eq.vertices()) CHECK(p.z() == 0.0);
    CHECK(eq.max_residual() < 1e-12);
    CHECK(eq.exact_circle().has_value());

    // inscribed-polygon length reaches the circumference once samples are dense
    Rng rng(41);
    const auto a = rng.sphere_point();
    for (const auto& circ : nodal_circles(a, 3)) {
        const auto c = trace_zonal_contour(circ, 32768, 3);
        CHECK(std::abs(c.length() - 2.0 * kPi * std::sqrt(1.0 - circ.height * circ.height)) < 1e-8);
        CHECK(c.max_residual() < 1e-12);
    }
    CHECK_THROWS_AS(circle_points({ez, 0.0}, 8), DomainError);
}

TEST_CASE("mesh tracing recovers the zonal circles") {
    const auto mesh = icosphere(5);
    Rng rng(42);
    const auto a = rng.sphere_point();
    const auto u = Eigenfunction::zonal_from_axis(a, 3);
    const auto contours = trace_contours_mesh(u, mesh);
    REQUIRE(contours.size() == 3);

    const auto zeros = legendre_zeros(3).zeros;
    std::vector<bool> seen(3, false);
    for (const auto& c : contours) {
        CHECK(c.max_residual() < 1e-9);
        // every vertex of a loop sits at one fixed height
        double height = dot(c.vertices()[0].vec(), a.vec());
        int which = -1;
        for (int k = 0; k < 3; ++k)
            if (std::abs(zeros[k] - height) < 1e-6) which = k;
        REQUIRE(which >= 0);
        seen[which] = true;
        for (const auto& p : c.vertices()) CHECK(std::abs(dot(p.vec(), a.vec()) - zeros[which]) < 1e-6);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));

    CHECK(trace_contours_mesh(Eigenfunction::basis(2, 0), mesh).size() == 2);

    // a regular random eigenfunction has at least one closed loop
    const auto f = random_eigenfunction(rng, 2);
    CHECK(trace_contours_mesh(f, mesh).size() >= 1);
}

TEST_CASE("sign changes along zonal contours: at least two, always even") {
    const SpherePoint ez{Vec3{0, 0, 1}}, ex{Vec3{1, 0, 0}};
    const auto v = Eigenfunction::zonal_from_axis(ex, 3);
    for (const auto& circ : nodal_circles(ez, 3)) {
        const auto c = trace_zonal_contour(circ, 512, 3);
        const auto scan = sign_changes_along(v, c);
        CHECK_FALSE(scan.infinite_zero_set);
        CHECK(scan.sign_changes >= 2);
        CHECK(scan.sign_changes % 2 == 0);
        CHECK(scan.zeros.size() == static_cast<std::size_t>(scan.sign_changes));
        for (const auto& z : scan.zeros) {
            CHECK(z.abs_u < kCertTol);
            CHECK(z.abs_v < kCertTol);
        }
    }

    Rng rng(43);
    const auto mesh = icosphere(4);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform() * 4);
        const auto u = random_eigenfunction(rng, n);
        const auto w = random_eigenfunction(rng, n);
        for (const auto& c : trace_contours_mesh(u, mesh)) {
            const auto scan = sign_changes_along(w, c);
            if (!scan.infinite_zero_set) CHECK(scan.sign_changes % 2 == 0);
        }
    }
}

TEST_CASE("parallel-circle family: the shared equator is flagged INFINITE_ZERO_SET") {
    // u ~ xz and v ~ yz share the whole equator; its points include the two critical
    // points of u, so the contour is built with the gradient floor disabled.
    const auto u = Eigenfunction::basis(2, 1);
    const auto v = Eigenfunction::basis(2, -1);
    const SpherePoint ez{Vec3{0, 0, 1}};
    const SphereContour equator(circle_points({ez, 0.0}, 360), u, /*grad_floor=*/0.0);
    const auto scan = sign_changes_along(v, equator);
    CHECK(scan.infinite_zero_set);

    // the meridian component {x = 0} of u carries four honest zeros of v
    const SpherePoint ex{Vec3{1, 0, 0}};
    const SphereContour meridian(circle_points({ex, 0.0}, 360), u, 0.0);
    const auto scan2 = sign_changes_along(v, meridian);
    CHECK_FALSE(scan2.infinite_zero_set);
    CHECK(scan2.sign_changes == 4);
}

TEST_CASE("nodal sets through critical points are rejected by the mesh tracer") {
    // u ~ xz vanishes on two great circles that cross at its critical points; the
    // traced loops would glue arcs of different components there, which the
    // gradient-flip check reports as a critical level.
    const auto mesh = icosphere(5);
    CHECK_THROWS_AS(trace_contours_mesh(Eigenfunction::basis(2, 1), mesh), CriticalLevelError);
    CHECK_THROWS_AS(
        common_zero_search(Eigenfunction::basis(2, 1), Eigenfunction::basis(2, -1), mesh),
        CriticalLevelError);
}

TEST_CASE("common_zero_search: zonal pairs match the direct count") {
    const auto mesh = icosphere(5);
    Rng rng(44);
    for (int n : {1, 2, 3, 5}) {
        const auto a = rng.sphere_point();
        const auto b = rng.sphere_point();
        const auto u = Eigenfunction::zonal_from_axis(a, n);
        const auto v = Eigenfunction::zonal_from_axis(b, n);
        const auto res = common_zero_search(u, v, mesh);
        CHECK_FALSE(res.theorem_violation());
        CHECK(res.infinite_contours.empty());

        const auto expected = zonal_common_zeros(a, b, n);
        // dedupe the found zeros (adjacent brackets can land on the same point)
        std::vector<Vec3> found;
        for (const auto& z : res.zeros) {
            bool dup = false;
            for (const auto& f : found)
                if (norm(f - z.point.vec()) < 1e-6) dup = true;
            if (!dup) found.push_back(z.point.vec());
        }
        CHECK(found.size() == expected.size());
        for (const auto& e : expected) {
            double best = 10.0;
            for (const auto& f : found) best = std::min(best, norm(f - e.vec()));
            CHECK(best < 1e-6);
        }
    }
}

TEST_CASE("common_zero_search: random same-degree pairs always produce zeros") {
    const auto mesh = icosphere(4);
    Rng rng(45);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform() * 5);
        const auto u = random_eigenfunction(rng, n);
        const auto v = random_eigenfunction(rng, n);
        const auto res = common_zero_search(u, v, mesh);
        CHECK_FALSE(res.theorem_violation());
        for (const auto& z : res.zeros) {
            CHECK(z.abs_u < kCertTol);
            CHECK(z.abs_v < kCertTol);
        }
    }
}

TEST_CASE("common_zero_search: u = v flags every contour as infinite") {
    const auto mesh = icosphere(4);
    Rng rng(46);
    const auto u = random_eigenfunction(rng, 3);
    const auto res = common_zero_search(u, u, mesh);
    CHECK(res.contour_count >= 1);
    CHECK(static_cast<int>(res.infinite_contours.size()) == res.contour_count);
    CHECK_FALSE(res.theorem_violation());
    CHECK(res.zeros.empty());
}

TEST_CASE("search rejects mismatched degrees") {
    const auto mesh = icosphere(2);
    Rng rng(47);
    const auto u = random_eigenfunction(rng, 2);
    const auto v = random_eigenfunction(rng, 3);
    CHECK_THROWS_AS(common_zero_search(u, v, mesh), DomainError);
}

TEST_CASE("mesh independence: certified zeros stable under refinement") {
    Rng rng(48);
    const auto u = random_eigenfunction(rng, 2);
    const auto v = random_eigenfunction(rng, 2);
    const auto r4 = common_zero_search(u, v, icosphere(4));
    const auto r5 = common_zero_search(u, v, icosphere(5));
    REQUIRE_FALSE(r4.zeros.empty());
    for (const auto& z : r4.zeros) {
        double best = 10.0;
        for (const auto& w : r5.zeros) best = std::min(best, norm(w.point.vec() - z.point.vec()));
        CHECK(best < 1e-5);
    }
}

TEST_CASE("ortho integral on zonal contours: same-degree basis annihilated") {
    Rng rng(49);
    for (int n : {1, 4, 9}) {
        const auto a = rng.sphere_point();
        const auto u = Eigenfunction::zonal_from_axis(a, n);
        for (const auto& circ : nodal_circles(a, n)) {
            const auto c = trace_zonal_contour(circ, 64, n);
            for (int m = -n; m <= n; ++m) {
                const double integral = ortho_integral(u, c, Eigenfunction::basis(n, m));
                CHECK(std::abs(integral) < (m == 0 ? 1e-10 : 1e-12));
            }
            // a different degree is generally not annihilated: the constant gives
            // 2 pi r q != 0
            const double off = ortho_integral(u, c, Eigenfunction::basis(0, 0));
            CHECK(std::abs(off) > 1e-4);
        }
    }
}

TEST_CASE("ortho integral on mesh contours of random eigenfunctions") {
    const auto mesh = icosphere(5);
    Rng rng(50);
    for (int n : {2, 4}) {
        const auto u = random_eigenfunction(rng, n);
        const auto contours = trace_contours_mesh(u, mesh);
        REQUIRE_FALSE(contours.empty());
        for (const auto& c : contours) {
            for (int m = -n; m <= n; ++m) {
                const double integral = ortho_integral(u, c, Eigenfunction::basis(n, m));
                CHECK(std::abs(integral) < 1e-6);
            }
        }
    }
}

TEST_CASE("contour measure is strictly positive") {
    Rng rng(51);
    const auto a = rng.sphere_point();
    const auto u = Eigenfunction::zonal_from_axis(a, 4);
    const auto c = trace_zonal_contour(nodal_circles(a, 4)[1], 128, 4);
    const auto m = contour_measure(u, c);
    REQUIRE(m.points.size() == m.q.size());
    for (double q : m.q) CHECK(q > kDefaultGradFloor);
    double len = 0.0;
    for (double ds : m.ds) len += ds;
    CHECK(len == doctest::Approx(c.length()).epsilon(1e-3));
}
