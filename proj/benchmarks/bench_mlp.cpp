#include <benchmark/benchmark.h>

#include <random>

#include "stepfeat/mlp.hpp"

using namespace stepfeat;

namespace {

TrainingSet make_set(std::size_t rows, std::size_t dim) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> n(0.0, 0.3);
  TrainingSet set;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> row(dim);
    for (auto& v : row) v = n(gen) + (r % 2 ? 0.2 : -0.2);
    set.rows.push_back(std::move(row));
    set.targets.push_back(static_cast<int>(r % 2));
  }
  return set;
}

}  // namespace

// Default schedule on a bootstrap-sized training half.
static void BM_MlpTrain(benchmark::State& state) {
  const TrainingSet set = make_set(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mlp_train(set));
}
BENCHMARK(BM_MlpTrain)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_BceGradient(benchmark::State& state) {
  const TrainingSet set = make_set(20, 7);
  const MlpModel m = MlpModel::random(7, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bce_gradient(m, set));
}
BENCHMARK(BM_BceGradient);
