#include <benchmark/benchmark.h>

#include "lee/integrator.hpp"
#include "lee/series_engine.hpp"
#include "lee/series_eval.hpp"

namespace {

void BM_ComputeCoefficients(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lee::compute_coefficients(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeCoefficients)->DenseRange(20, 140, 20)->Unit(benchmark::kMillisecond)->Complexity();

void BM_NumericSeries(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const lee::Rational index(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lee::compute_numeric_series(index, m));
}
BENCHMARK(BM_NumericSeries)->Arg(28)->Arg(56)->Unit(benchmark::kMicrosecond);

void BM_MillerPower(benchmark::State& state) {
  const std::vector<lee::Rational> base{lee::Rational(1), lee::Rational(0), lee::Rational(1, 3)};
  const lee::Rational exponent(-1, 2);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lee::miller_power(base, exponent, m));
}
BENCHMARK(BM_MillerPower)->Arg(28)->Arg(112);

void BM_EvalSeriesFloat(benchmark::State& state) {
  const lee::TruncatedSeries series(lee::compute_numeric_series(lee::Rational(3), 28));
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lee::eval_series_float(series, x));
    x = x < 3.0 ? x + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_EvalSeriesFloat);

void BM_SolveMidpoint(benchmark::State& state) {
  lee::IntegratorConfig cfg;
  cfg.dx = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(lee::solve_midpoint(3.0, cfg));
}
BENCHMARK(BM_SolveMidpoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
