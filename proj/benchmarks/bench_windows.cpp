#include <benchmark/benchmark.h>

#include "stepfeat/distribution.hpp"
#include "stepfeat/features.hpp"
#include "stepfeat/generators.hpp"
#include "stepfeat/vector_codec.hpp"

using namespace stepfeat;

namespace {

const StepSignal& levels() {
  static const StepSignal s = approximate(gen_correlated(132300, 50, 1)).levels;
  return s;
}

}  // namespace

static void BM_WindowCodes(benchmark::State& state) {
  levels();
  const auto lw = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(window_codes(levels(), lw));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(levels().size()));
}
BENCHMARK(BM_WindowCodes)->Arg(7)->Arg(11)->Arg(20);

static void BM_VectorFrequencies(benchmark::State& state) {
  const auto lw = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vector_frequencies(levels(), lw));
}
BENCHMARK(BM_VectorFrequencies)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_Histogram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(histogram(levels(), 7));
}
BENCHMARK(BM_Histogram)->Unit(benchmark::kMillisecond);

static void BM_AverageVector(benchmark::State& state) {
  const VectorDistribution d = vector_frequencies(levels(), 7);
  for (auto _ : state) benchmark::DoNotOptimize(average_vector(d));
}
BENCHMARK(BM_AverageVector);
