// Serial reference vs OpenMP kernels.
#include "quasipoly/fields.hpp"
#include "quasipoly/modelset.hpp"

#include <benchmark/benchmark.h>

using namespace quasipoly;

static void BM_GenerateSerial(benchmark::State& state) {
  const auto spec = preset("ttt5");
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_serial(spec, r).points.size());
}
BENCHMARK(BM_GenerateSerial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_GenerateParallel(benchmark::State& state) {
  const auto spec = preset("ttt5");
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate(spec, r).points.size());
}
BENCHMARK(BM_GenerateParallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_DeciderSweepSerial(benchmark::State& state) {
  const auto hi = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_decider_mismatches_serial(3, hi, 8, 600));
}
BENCHMARK(BM_DeciderSweepSerial)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_DeciderSweepParallel(benchmark::State& state) {
  const auto hi = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_decider_mismatches(3, hi, 8, 600));
}
BENCHMARK(BM_DeciderSweepParallel)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_DeloneSerial(benchmark::State& state) {
  const auto ps = generate(preset("ab8"), 15.0);
  for (auto _ : state) benchmark::DoNotOptimize(delone_diagnostics_serial(ps, 15.0).max_hole_radius);
}
BENCHMARK(BM_DeloneSerial)->Unit(benchmark::kMillisecond);

static void BM_DeloneParallel(benchmark::State& state) {
  const auto ps = generate(preset("ab8"), 15.0);
  for (auto _ : state) benchmark::DoNotOptimize(delone_diagnostics(ps, 15.0).max_hole_radius);
}
BENCHMARK(BM_DeloneParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
