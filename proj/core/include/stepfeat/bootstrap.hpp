#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stepfeat/mlp.hpp"

namespace stepfeat {

/// Feature rows for one class. Requires at least 2 rows of equal, non-zero
/// length.
class FeatureMatrix {
 public:
  FeatureMatrix(std::vector<std::vector<double>> rows, std::string label = {});

  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return rows_.front().size(); }
  const std::string& label() const noexcept { return label_; }

 private:
  std::vector<std::vector<double>> rows_;
  std::string label_;
};

struct BootstrapIteration {
  std::size_t correct1;
  std::size_t correct2;
  std::size_t held_out1;
  std::size_t held_out2;

  friend bool operator==(const BootstrapIteration&, const BootstrapIteration&) = default;
};

struct BootstrapReport {
  std::vector<BootstrapIteration> iterations;

  /// Correct held-out predictions over all held-out rows and iterations.
  double mean_accuracy() const noexcept;
};

/// Repeats num_tests times: shuffle each matrix, train a fresh model on the
/// first floor(R/2) rows of each (class 1 -> target 0, class 2 -> target 1),
/// classify the remaining rows at 0.5. Iteration i draws its shuffles and
/// its initial weights from seeds derived from (seed, i), so any subset of
/// iterations can be recomputed on its own.
///
/// train.seed is ignored; the per-iteration seed replaces it.
BootstrapReport bootstrap_evaluate(const FeatureMatrix& m1, const FeatureMatrix& m2,
                                   std::size_t num_tests, std::uint64_t seed,
                                   const TrainConfig& train = {});

/// A single iteration of bootstrap_evaluate.
BootstrapIteration bootstrap_iteration(const FeatureMatrix& m1, const FeatureMatrix& m2,
                                       std::size_t index, std::uint64_t seed,
                                       const TrainConfig& train = {});

}  // namespace stepfeat
