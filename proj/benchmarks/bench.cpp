#include <benchmark/benchmark.h>

#include "zmean/box_bound.hpp"
#include "zmean/interval.hpp"
#include "zmean/pipeline.hpp"
#include "zmean/special_fn.hpp"
#include "zmean/verifier.hpp"

using namespace zmean;

static void BM_IntervalMul(benchmark::State& st) {
  Interval a(1.25, 1.5), b(-0.75, 2.0);
  for (auto _ : st) {
    benchmark::DoNotOptimize(a * b);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_IntervalMul);

static void BM_IntervalExpLog(benchmark::State& st) {
  Interval a(3.5, 3.5000001);
  for (auto _ : st) benchmark::DoNotOptimize(log(exp(a)));
}
BENCHMARK(BM_IntervalExpLog);

static void BM_ZetaCell(benchmark::State& st) {
  double t = static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cell_sup_abs_sq(0.6, t, 0.0025));
}
BENCHMARK(BM_ZetaCell)->Arg(10)->Arg(100);

static void BM_AssembleMain(benchmark::State& st) {
  PipelineConfig cfg = PipelineConfig::make(100.0, "1.501", RangeMode::tau_quarter_range);
  for (auto _ : st) benchmark::DoNotOptimize(assemble_main(cfg));
}
BENCHMARK(BM_AssembleMain)->Unit(benchmark::kMillisecond);

static void BM_BestC100(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(best_c(Interval(100.0)));
}
BENCHMARK(BM_BestC100)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_DivisorSieve(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(divisor_sieve(0.0, st.range(0)));
}
BENCHMARK(BM_DivisorSieve)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
