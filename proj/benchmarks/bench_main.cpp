#include <benchmark/benchmark.h>

#include <numbers>

#include "robinsq/nodal.hpp"
#include "robinsq/robin1d.hpp"
#include "robinsq/spectrum2d.hpp"

using namespace robinsq;

static void BM_SolveAlpha(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  double h = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_alpha(p, RobinParam::finite(h)).alpha);
    h = h < 100.0 ? h * 1.01 : 0.37;
  }
}
BENCHMARK(BM_SolveAlpha)->Arg(0)->Arg(4)->Arg(8);

static void BM_EnumerateSpectrum(benchmark::State& state) {
  const double lambda_max = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_spectrum(RobinParam::finite(2.0), lambda_max).entries.size());
  }
}
BENCHMARK(BM_EnumerateSpectrum)->Arg(150)->Arg(600);

static void BM_Census(benchmark::State& state) {
  const ThetaFamily f(RobinParam::finite(20.0), 0.4, 5, 1);
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_at_resolution(f, resolution).domains);
}
BENCHMARK(BM_Census)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
