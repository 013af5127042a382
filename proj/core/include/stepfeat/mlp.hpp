#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stepfeat {

inline constexpr std::size_t kHiddenUnits = 5;

/// Feed-forward net [in, 5, 5, 1]: two ReLU hidden layers and a sigmoid
/// output unit.
///
/// Parameters live in one flat vector, layer by layer, each layer's weight
/// matrix (row-major, out x in) followed by its biases. Gradients use the
/// same layout, which is what lets the finite-difference checks perturb
/// parameters by index.
class MlpModel {
 public:
  static constexpr std::size_t kLayers = 3;

  /// All parameters zero.
  explicit MlpModel(std::size_t input_dim);

  /// Weights and biases uniform on [-range, range].
  static MlpModel random(std::size_t input_dim, std::uint64_t seed, double range = 0.5);

  std::size_t input_dim() const noexcept { return sizes_[0]; }
  const std::array<std::size_t, kLayers + 1>& layer_sizes() const noexcept { return sizes_; }

  std::span<double> parameters() noexcept { return params_; }
  std::span<const double> parameters() const noexcept { return params_; }

  // layer is 0-based: 0 and 1 hidden, 2 output.
  std::span<double> weights(std::size_t layer) noexcept;
  std::span<const double> weights(std::size_t layer) const noexcept;
  std::span<double> biases(std::size_t layer) noexcept;
  std::span<const double> biases(std::size_t layer) const noexcept;

  friend bool operator==(const MlpModel&, const MlpModel&) = default;

 private:
  std::size_t weight_offset(std::size_t layer) const noexcept;
  std::size_t bias_offset(std::size_t layer) const noexcept;

  std::array<std::size_t, kLayers + 1> sizes_;
  std::vector<double> params_;
};

/// Sigmoid output in (0, 1). Throws dimension_mismatch when x.size() differs
/// from the model's input dimension.
double mlp_forward(const MlpModel& m, std::span<const double> x);

/// Rows with binary targets (0 or 1), all rows of equal length.
struct TrainingSet {
  std::vector<std::vector<double>> rows;
  std::vector<int> targets;
};

struct TrainConfig {
  double learning_rate = 0.05;
  std::size_t epochs = 500;
  double init_range = 0.5;
  std::uint64_t seed = 0;
};

/// Mean binary cross-entropy over the set, evaluated from the pre-sigmoid
/// activation so it stays finite for saturated outputs.
double bce_loss(const MlpModel& m, const TrainingSet& set);

/// Gradient of bce_loss in the flat parameter layout of MlpModel.
std::vector<double> bce_gradient(const MlpModel& m, const TrainingSet& set);

struct TrainingTrace {
  MlpModel model;
  /// Loss before each epoch's update, then the final loss: epochs + 1 values.
  std::vector<double> losses;
};

/// Full-batch gradient descent on bce_loss from MlpModel::random(seed).
/// Throws single_class when either target is missing, dimension_mismatch on
/// ragged rows, and non_finite_loss if the loss stops being finite.
TrainingTrace mlp_train_traced(const TrainingSet& set, const TrainConfig& cfg = {});
MlpModel mlp_train(const TrainingSet& set, const TrainConfig& cfg = {});

/// Plain-text model format, see docs/model-format.md. Values are written
/// with round-trip precision, so from_text(to_text(m)) == m.
std::string to_text(const MlpModel& m);
MlpModel model_from_text(std::string_view text);

}  // namespace stepfeat
