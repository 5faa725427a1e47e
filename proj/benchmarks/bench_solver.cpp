#include <benchmark/benchmark.h>

#include "alphakit/solver.hpp"

using namespace alphakit;
using namespace alphakit::solver;

namespace {

BoundaryData bench_boundary() {
  std::map<int, Complex> coeffs;
  for (int k = -4; k <= 4; ++k) {
    coeffs[k] = Complex(0.3 / (1 + std::abs(k)), 0.1 * k);
  }
  return BoundaryData::fourier(std::move(coeffs));
}

}  // namespace

static void BM_PoissonIntegral(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.circle_order = static_cast<int>(state.range(0));
  const SolutionField field(bench_boundary(), SourceField::zero(), Alpha(1.5), cfg);
  const Complex z(0.4, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(field.value(z));
  }
}
BENCHMARK(BM_PoissonIntegral)->Arg(128)->Arg(512)->Arg(2048);

static void BM_GreenPotential(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.radial_order = static_cast<int>(state.range(0));
  cfg.angular_order = 4 * cfg.radial_order;
  const SolutionField field(BoundaryData::zero(), SourceField::constant(1.0), Alpha(1.5), cfg);
  const Complex z(0.4, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(field.value(z));
  }
}
BENCHMARK(BM_GreenPotential)->Arg(16)->Arg(32)->Arg(64);

static void BM_SolutionJacobian(benchmark::State& state) {
  const SolutionField field(bench_boundary(), SourceField::constant(1.0), Alpha(1.5));
  const Complex z(0.4, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(field.jacobian(z));
  }
}
BENCHMARK(BM_SolutionJacobian);

BENCHMARK_MAIN();
