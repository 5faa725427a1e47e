#include <benchmark/benchmark.h>

#include "alphakit/kernels.hpp"

using namespace alphakit;

static void BM_HAlphaSeries(benchmark::State& state) {
  const double s = state.range(0) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::h_alpha(s, Alpha(1.5)));
  }
}
BENCHMARK(BM_HAlphaSeries)->Arg(10)->Arg(50)->Arg(90);

static void BM_HAlphaComplement(benchmark::State& state) {
  const double x = std::pow(10.0, -state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::h_alpha_complement(x, Alpha(1.5)));
  }
}
BENCHMARK(BM_HAlphaComplement)->Arg(2)->Arg(8)->Arg(16);

static void BM_PoissonKernelAlpha(benchmark::State& state) {
  const Complex z(0.35, -0.52);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::poisson_kernel_alpha(z, Alpha(1.5)));
  }
}
BENCHMARK(BM_PoissonKernelAlpha);

static void BM_GreenAlpha(benchmark::State& state) {
  const Complex z(0.35, -0.52), w(0.1, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::green_alpha(z, w, Alpha(1.5)));
  }
}
BENCHMARK(BM_GreenAlpha);

static void BM_GreenAlphaDz(benchmark::State& state) {
  const Complex z(0.35, -0.52), w(0.1, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::green_alpha_dz(z, w, Alpha(1.5)));
  }
}
BENCHMARK(BM_GreenAlphaDz);

BENCHMARK_MAIN();
