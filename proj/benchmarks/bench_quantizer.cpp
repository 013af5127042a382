#include <benchmark/benchmark.h>

#include "stepfeat/generators.hpp"
#include "stepfeat/quantizer.hpp"

using namespace stepfeat;

static void BM_Approximate(benchmark::State& state) {
  const Signal s = gen_correlated(static_cast<std::size_t>(state.range(0)), 50, 1);
  for (auto _ : state) benchmark::DoNotOptimize(approximate(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Approximate)->Arg(10000)->Arg(132300)->Unit(benchmark::kMillisecond);

static void BM_Quantize(benchmark::State& state) {
  const Signal s = gen_white_noise(static_cast<std::size_t>(state.range(0)), 1);
  const ThresholdSet t = ThresholdSet::coupled(-0.2, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(quantize(s.samples(), t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Quantize)->Arg(132300);
