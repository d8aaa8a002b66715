#include <benchmark/benchmark.h>

#include "nodallab/circles.hpp"
#include "nodallab/contour.hpp"
#include "nodallab/harmonics.hpp"
#include "nodallab/incidence.hpp"
#include "nodallab/orbits.hpp"
#include "nodallab/quad.hpp"

using namespace nodallab;

namespace {

void BM_legendre_eval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(legendre_eval(n, x));
        x = x < 0.99 ? x + 1e-4 : -0.99;
    }
}
BENCHMARK(BM_legendre_eval)->Arg(10)->Arg(100)->Arg(400);

void BM_legendre_zeros(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(legendre_zeros(n));
}
BENCHMARK(BM_legendre_zeros)->Arg(50)->Arg(200)->Arg(400);

void BM_eigenfunction_eval(benchmark::State& state) {
    Rng rng(1);
    const auto f = random_eigenfunction(rng, static_cast<int>(state.range(0)));
    const auto p = rng.sphere_point();
    for (auto _ : state) benchmark::DoNotOptimize(f(p));
}
BENCHMARK(BM_eigenfunction_eval)->Arg(2)->Arg(8)->Arg(20);

void BM_eigenfunction_jet(benchmark::State& state) {
    Rng rng(2);
    const auto f = random_eigenfunction(rng, static_cast<int>(state.range(0)));
    const auto p = rng.sphere_point();
    for (auto _ : state) benchmark::DoNotOptimize(f.jet(p));
}
BENCHMARK(BM_eigenfunction_jet)->Arg(2)->Arg(8)->Arg(20);

void BM_chord_model_count(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SpherePoint a{Vec3{0, 0, 1}}, b{Vec3{1, 0, 0}};
    for (auto _ : state) benchmark::DoNotOptimize(chord_model_count(a, b, n));
}
BENCHMARK(BM_chord_model_count)->Arg(30)->Arg(100)->Arg(400);

void BM_direct_count(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SpherePoint a{Vec3{0, 0, 1}}, b{Vec3{1, 0, 0}};
    for (auto _ : state) benchmark::DoNotOptimize(count_common_zeros_direct(a, b, n));
}
BENCHMARK(BM_direct_count)->Arg(30)->Arg(100)->Arg(400);

void BM_icosphere(benchmark::State& state) {
    const int sub = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(icosphere(sub));
}
BENCHMARK(BM_icosphere)->Arg(3)->Arg(5);

void BM_trace_contours(benchmark::State& state) {
    Rng rng(3);
    const auto mesh = icosphere(static_cast<int>(state.range(1)));
    const auto u = random_eigenfunction(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(trace_contours_mesh(u, mesh));
}
BENCHMARK(BM_trace_contours)->Args({2, 4})->Args({8, 5});

void BM_common_zero_search(benchmark::State& state) {
    Rng rng(4);
    const auto mesh = icosphere(static_cast<int>(state.range(1)));
    const auto u = random_eigenfunction(rng, static_cast<int>(state.range(0)));
    const auto v = random_eigenfunction(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(common_zero_search(u, v, mesh));
}
BENCHMARK(BM_common_zero_search)->Args({2, 4})->Args({8, 5});

void BM_nodal_domains(benchmark::State& state) {
    Rng rng(5);
    const auto mesh = icosphere(5);
    const auto vals = mesh_values(random_eigenfunction(rng, static_cast<int>(state.range(0))), mesh);
    for (auto _ : state) benchmark::DoNotOptimize(nodal_domains(vals, mesh));
}
BENCHMARK(BM_nodal_domains)->Arg(2)->Arg(8);

void BM_ortho_integral_mesh(benchmark::State& state) {
    Rng rng(6);
    const auto mesh = icosphere(5);
    const int n = static_cast<int>(state.range(0));
    const auto u = random_eigenfunction(rng, n);
    const auto contours = trace_contours_mesh(u, mesh);
    for (auto _ : state) benchmark::DoNotOptimize(basis_ortho_integrals(u, contours.front(), n));
}
BENCHMARK(BM_ortho_integral_mesh)->Arg(2)->Arg(6);

void BM_dirichlet_band(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_band_identity(n, 1));
}
BENCHMARK(BM_dirichlet_band)->Arg(5)->Arg(20);

void BM_orbit_hyperplane(benchmark::State& state) {
    Rng rng(7);
    for (auto _ : state) {
        const CVec2 v{std::complex<double>(rng.normal(), rng.normal()),
                      std::complex<double>(rng.normal(), rng.normal())};
        const CVec2 h{std::complex<double>(rng.normal(), rng.normal()),
                      std::complex<double>(rng.normal(), rng.normal())};
        benchmark::DoNotOptimize(orbit_meets_hyperplane(v, h, rng));
    }
}
BENCHMARK(BM_orbit_hyperplane);

void BM_so3_action_apply(benchmark::State& state) {
    Rng rng(8);
    const SO3Action action(static_cast<int>(state.range(0)));
    std::vector<double> coeffs(action.dim());
    for (auto& c : coeffs) c = rng.normal();
    const auto R = rng.rotation();
    for (auto _ : state) benchmark::DoNotOptimize(action.apply(R, coeffs));
}
BENCHMARK(BM_so3_action_apply)->Arg(1)->Arg(4);

} // namespace

BENCHMARK_MAIN();
