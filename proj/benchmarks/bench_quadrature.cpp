#include <benchmark/benchmark.h>

#include "alphakit/quadrature.hpp"

using namespace alphakit;

static void BM_GaussLegendreNodes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::gauss_legendre(n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_GaussLegendreNodes)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_IntegrateDisk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const quad::DiskRule rule(n, 4 * n);
  const auto f = [](Complex w) { return Complex(1.0 - abs2(w), 0.0); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::integrate_disk(f, rule));
  }
}
BENCHMARK(BM_IntegrateDisk)->Arg(16)->Arg(32)->Arg(64);

static void BM_IntegrateDiskMobiusJ1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const quad::DiskRule rule(n, 4 * n);
  const Complex z(0.5, 0.2);
  const auto f = [z](Complex w) {
    return Complex(std::log(abs2(1.0 - std::conj(z) * w) / abs2(z - w)), 0.0);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::integrate_disk_mobius(f, z, rule));
  }
}
BENCHMARK(BM_IntegrateDiskMobiusJ1)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
