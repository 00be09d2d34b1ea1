#include <benchmark/benchmark.h>

#include "bargmann/quadrature.hpp"
#include "bargmann/slice_transforms.hpp"
#include "bargmann/spaces.hpp"
#include "bargmann/transforms.hpp"
#include "bargmann/verification.hpp"

using namespace bargmann;

static void BM_GaussHermiteRule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rule = QuadratureRule::gauss_hermite(n, 1.0);
        benchmark::DoNotOptimize(rule.nodes().data());
    }
}
BENCHMARK(BM_GaussHermiteRule)->Arg(32)->Arg(96)->Arg(256);

static void BM_LineTransformRoundtrip(benchmark::State& state) {
    const HermiteCoeffs f = random_hermite(1.0, static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        auto back = b1_inverse(b1_forward(f));
        benchmark::DoNotOptimize(back.c.data());
    }
}
BENCHMARK(BM_LineTransformRoundtrip)->Arg(16)->Arg(32);

static void BM_LeftInverseRoundtrip(benchmark::State& state) {
    const HermiteCoeffs f = random_hermite(1.0, static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        auto back = r_transform(a_subspace_embed(g_transform(f)));
        benchmark::DoNotOptimize(back.c.data());
    }
}
BENCHMARK(BM_LeftInverseRoundtrip)->Arg(16)->Arg(32);

static void BM_SliceKernel(benchmark::State& state) {
    const Quaternion q(0.4, 0.3, -0.2, 0.1);
    const Quaternion p(0.1, 0.5, 0.2, -0.3);
    for (auto _ : state) {
        auto k = kernel_KH(q, p, 2.0);
        benchmark::DoNotOptimize(&k);
    }
}
BENCHMARK(BM_SliceKernel);

static void BM_PlanarQuadratureKernelPairing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PlanarRule rule = PlanarRule::gauss(n, 1.0);
    const Complex xi(0.7, -0.2);
    for (auto _ : state) {
        auto v = rule.integrate(
            [&](Complex z) { return z * z * std::conj(kernel_K1(z, xi, 1.0)); });
        benchmark::DoNotOptimize(&v);
    }
}
BENCHMARK(BM_PlanarQuadratureKernelPairing)->Arg(48)->Arg(96);

static void BM_FactorizationResidual(benchmark::State& state) {
    const HermiteCoeffs f = random_hermite(1.0, 8, 3);
    const auto grid = default_complex_grid();
    for (auto _ : state) {
        const double r =
            g_factorization_residual(f, grid, grid, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(&r);
    }
}
BENCHMARK(BM_FactorizationResidual)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
