#include "stepfeat/bootstrap.hpp"

#include <numeric>

#include "stepfeat/error.hpp"
#include "stepfeat/random.hpp"

namespace stepfeat {

FeatureMatrix::FeatureMatrix(std::vector<std::vector<double>> rows, std::string label)
    : rows_(std::move(rows)), label_(std::move(label)) {
  if (rows_.size() < 2) fail(Errc::invalid_argument, "feature matrix needs at least 2 rows to split");
  if (rows_.front().empty()) fail(Errc::invalid_argument, "feature rows must be non-empty");
  for (const auto& r : rows_)
    if (r.size() != rows_.front().size()) fail(Errc::dimension_mismatch, "feature rows differ in length");
}

double BootstrapReport::mean_accuracy() const noexcept {
  std::size_t correct = 0, total = 0;
  for (const auto& it : iterations) {
    correct += it.correct1 + it.correct2;
    total += it.held_out1 + it.held_out2;
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

BootstrapIteration bootstrap_iteration(const FeatureMatrix& m1, const FeatureMatrix& m2, std::size_t index,
                                       std::uint64_t seed, const TrainConfig& train) {
  if (m1.dim() != m2.dim()) fail(Errc::dimension_mismatch, "class matrices differ in feature length");

  auto permutation = [](std::size_t n, std::uint64_t s) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(s);
    rng.shuffle(std::span(order));
    return order;
  };
  const auto order1 = permutation(m1.row_count(), derive_seed(seed, 3 * index));
  const auto order2 = permutation(m2.row_count(), derive_seed(seed, 3 * index + 1));
  const std::size_t train1 = m1.row_count() / 2;
  const std::size_t train2 = m2.row_count() / 2;

  TrainingSet set;
  for (std::size_t i = 0; i < train1; ++i) {
    set.rows.push_back(m1.rows()[order1[i]]);
    set.targets.push_back(0);
  }
  for (std::size_t i = 0; i < train2; ++i) {
    set.rows.push_back(m2.rows()[order2[i]]);
    set.targets.push_back(1);
  }

  TrainConfig cfg = train;
  cfg.seed = derive_seed(seed, 3 * index + 2);
  const MlpModel model = mlp_train(set, cfg);

  BootstrapIteration result{0, 0, m1.row_count() - train1, m2.row_count() - train2};
  for (std::size_t i = train1; i < m1.row_count(); ++i)
    if (mlp_forward(model, m1.rows()[order1[i]]) < 0.5) ++result.correct1;
  for (std::size_t i = train2; i < m2.row_count(); ++i)
    if (mlp_forward(model, m2.rows()[order2[i]]) >= 0.5) ++result.correct2;
  return result;
}

BootstrapReport bootstrap_evaluate(const FeatureMatrix& m1, const FeatureMatrix& m2, std::size_t num_tests,
                                   std::uint64_t seed, const TrainConfig& train) {
  if (num_tests == 0) fail(Errc::invalid_argument, "number of bootstrap tests must be at least 1");
  BootstrapReport report;
  report.iterations.reserve(num_tests);
  for (std::size_t i = 0; i < num_tests; ++i) report.iterations.push_back(bootstrap_iteration(m1, m2, i, seed, train));
  return report;
}

}  // namespace stepfeat
