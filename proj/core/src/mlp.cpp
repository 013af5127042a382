#include "stepfeat/mlp.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <cmath>
#include <sstream>
#include <string>

#include "stepfeat/error.hpp"
#include "stepfeat/random.hpp"

namespace stepfeat {

namespace {

constexpr std::string_view kMagic = "stepfeat-mlp";
constexpr int kFormatVersion = 1;

double sigmoid(double z) noexcept {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) noexcept { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

// Activations of one forward pass, kept for backpropagation.
struct Activations {
  std::array<double, kHiddenUnits> pre1, out1, pre2, out2;
  double logit;
};

void affine(std::span<const double> w, std::span<const double> b, std::span<const double> x,
            std::span<double> out) {
  const std::size_t in = x.size();
  for (std::size_t r = 0; r < out.size(); ++r) {
    double acc = b[r];
    for (std::size_t c = 0; c < in; ++c) acc += w[r * in + c] * x[c];
    out[r] = acc;
  }
}

Activations forward(const MlpModel& m, std::span<const double> x) {
  Activations a{};
  affine(m.weights(0), m.biases(0), x, a.pre1);
  for (std::size_t i = 0; i < kHiddenUnits; ++i) a.out1[i] = std::max(0.0, a.pre1[i]);
  affine(m.weights(1), m.biases(1), a.out1, a.pre2);
  for (std::size_t i = 0; i < kHiddenUnits; ++i) a.out2[i] = std::max(0.0, a.pre2[i]);
  std::array<double, 1> logit{};
  affine(m.weights(2), m.biases(2), a.out2, logit);
  a.logit = logit[0];
  return a;
}

void check_set(const MlpModel* m, const TrainingSet& set) {
  if (set.rows.size() != set.targets.size()) fail(Errc::dimension_mismatch, "rows and targets differ in count");
  if (set.rows.empty()) fail(Errc::invalid_argument, "training set is empty");
  const std::size_t dim = m ? m->input_dim() : set.rows.front().size();
  for (const auto& row : set.rows)
    if (row.size() != dim) fail(Errc::dimension_mismatch, "feature row length does not match the model input");
  for (int t : set.targets)
    if (t != 0 && t != 1) fail(Errc::invalid_argument, "targets must be 0 or 1");
}

}  // namespace

MlpModel::MlpModel(std::size_t input_dim) : sizes_{input_dim, kHiddenUnits, kHiddenUnits, 1} {
  if (input_dim == 0) fail(Errc::invalid_argument, "model input dimension must be positive");
  std::size_t n = 0;
  for (std::size_t l = 0; l < kLayers; ++l) n += sizes_[l + 1] * (sizes_[l] + 1);
  params_.assign(n, 0.0);
}

MlpModel MlpModel::random(std::size_t input_dim, std::uint64_t seed, double range) {
  MlpModel m(input_dim);
  Rng rng(seed);
  for (auto& p : m.params_) p = rng.uniform(-range, range);
  return m;
}

std::size_t MlpModel::weight_offset(std::size_t layer) const noexcept {
  std::size_t off = 0;
  for (std::size_t l = 0; l < layer; ++l) off += sizes_[l + 1] * (sizes_[l] + 1);
  return off;
}

std::size_t MlpModel::bias_offset(std::size_t layer) const noexcept {
  return weight_offset(layer) + sizes_[layer + 1] * sizes_[layer];
}

std::span<double> MlpModel::weights(std::size_t layer) noexcept {
  return std::span(params_).subspan(weight_offset(layer), sizes_[layer + 1] * sizes_[layer]);
}
std::span<const double> MlpModel::weights(std::size_t layer) const noexcept {
  return std::span(params_).subspan(weight_offset(layer), sizes_[layer + 1] * sizes_[layer]);
}
std::span<double> MlpModel::biases(std::size_t layer) noexcept {
  return std::span(params_).subspan(bias_offset(layer), sizes_[layer + 1]);
}
std::span<const double> MlpModel::biases(std::size_t layer) const noexcept {
  return std::span(params_).subspan(bias_offset(layer), sizes_[layer + 1]);
}

double mlp_forward(const MlpModel& m, std::span<const double> x) {
  if (x.size() != m.input_dim())
    fail(Errc::dimension_mismatch, "input has " + std::to_string(x.size()) + " features, model expects " +
                                       std::to_string(m.input_dim()));
  // Kept strictly inside (0, 1) where double rounding would saturate.
  constexpr double lo = std::numeric_limits<double>::denorm_min();
  const double hi = std::nextafter(1.0, 0.0);
  return std::clamp(sigmoid(forward(m, x).logit), lo, hi);
}

double bce_loss(const MlpModel& m, const TrainingSet& set) {
  check_set(&m, set);
  double total = 0.0;
  for (std::size_t i = 0; i < set.rows.size(); ++i) {
    const double z = forward(m, set.rows[i]).logit;
    // -[y log s(z) + (1-y) log(1 - s(z))] = softplus(z) - y z
    total += softplus(z) - set.targets[i] * z;
  }
  return total / static_cast<double>(set.rows.size());
}

std::vector<double> bce_gradient(const MlpModel& m, const TrainingSet& set) {
  check_set(&m, set);
  MlpModel grad(m.input_dim());
  auto gw0 = grad.weights(0), gb0 = grad.biases(0);
  auto gw1 = grad.weights(1), gb1 = grad.biases(1);
  auto gw2 = grad.weights(2), gb2 = grad.biases(2);
  const auto w1 = m.weights(1);
  const auto w2 = m.weights(2);
  const std::size_t in = m.input_dim();
  const double scale = 1.0 / static_cast<double>(set.rows.size());

  for (std::size_t i = 0; i < set.rows.size(); ++i) {
    const auto& x = set.rows[i];
    const Activations a = forward(m, x);
    const double d_logit = (sigmoid(a.logit) - set.targets[i]) * scale;

    std::array<double, kHiddenUnits> d_pre2{};
    gb2[0] += d_logit;
    for (std::size_t j = 0; j < kHiddenUnits; ++j) {
      gw2[j] += d_logit * a.out2[j];
      d_pre2[j] = a.pre2[j] > 0.0 ? d_logit * w2[j] : 0.0;
    }

    std::array<double, kHiddenUnits> d_pre1{};
    for (std::size_t r = 0; r < kHiddenUnits; ++r) {
      gb1[r] += d_pre2[r];
      for (std::size_t c = 0; c < kHiddenUnits; ++c) {
        gw1[r * kHiddenUnits + c] += d_pre2[r] * a.out1[c];
        d_pre1[c] += d_pre2[r] * w1[r * kHiddenUnits + c];
      }
    }
    for (std::size_t r = 0; r < kHiddenUnits; ++r) {
      const double d = a.pre1[r] > 0.0 ? d_pre1[r] : 0.0;
      gb0[r] += d;
      for (std::size_t c = 0; c < in; ++c) gw0[r * in + c] += d * x[c];
    }
  }
  return {grad.parameters().begin(), grad.parameters().end()};
}

TrainingTrace mlp_train_traced(const TrainingSet& set, const TrainConfig& cfg) {
  check_set(nullptr, set);
  bool has0 = false, has1 = false;
  for (int t : set.targets) (t == 0 ? has0 : has1) = true;
  if (!has0 || !has1) fail(Errc::single_class, "training set needs rows of both classes");
  if (!(cfg.learning_rate > 0.0) || !(cfg.init_range >= 0.0))
    fail(Errc::invalid_argument, "learning rate must be positive and init range non-negative");

  TrainingTrace trace{MlpModel::random(set.rows.front().size(), cfg.seed, cfg.init_range), {}};
  trace.losses.reserve(cfg.epochs + 1);
  for (std::size_t epoch = 0;; ++epoch) {
    const double loss = bce_loss(trace.model, set);
    if (!std::isfinite(loss))
      fail(Errc::non_finite_loss, "training loss became non-finite at epoch " + std::to_string(epoch));
    trace.losses.push_back(loss);
    if (epoch == cfg.epochs) break;
    const auto grad = bce_gradient(trace.model, set);
    auto params = trace.model.parameters();
    for (std::size_t k = 0; k < params.size(); ++k) params[k] -= cfg.learning_rate * grad[k];
  }
  return trace;
}

MlpModel mlp_train(const TrainingSet& set, const TrainConfig& cfg) { return mlp_train_traced(set, cfg).model; }

std::string to_text(const MlpModel& m) {
  std::ostringstream os;
  os << kMagic << ' ' << kFormatVersion << '\n';
  const auto& sizes = m.layer_sizes();
  os << "sizes";
  for (std::size_t s : sizes) os << ' ' << s;
  os << "\nhidden relu\noutput sigmoid\n";
  char buf[32];
  auto put = [&](double v) {
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    os.write(buf, res.ptr - buf);
  };
  for (std::size_t l = 0; l < MlpModel::kLayers; ++l) {
    const std::size_t rows = sizes[l + 1], cols = sizes[l];
    os << "weights " << l << ' ' << rows << ' ' << cols << '\n';
    const auto w = m.weights(l);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (c) os << ' ';
        put(w[r * cols + c]);
      }
      os << '\n';
    }
    os << "biases " << l << ' ' << rows << '\n';
    const auto b = m.biases(l);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r) os << ' ';
      put(b[r]);
    }
    os << '\n';
  }
  return os.str();
}

MlpModel model_from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  auto bad = [](const std::string& what) { fail(Errc::parse_error, "model text: " + what); };
  auto expect_word = [&](std::string_view word) {
    std::string got;
    if (!(is >> got) || got != word) bad("expected '" + std::string(word) + "'");
  };
  auto read_size = [&]() {
    std::size_t v = 0;
    if (!(is >> v)) bad("expected an integer");
    return v;
  };
  auto read_real = [&]() {
    std::string tok;
    if (!(is >> tok)) bad("unexpected end of parameters");
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || !std::isfinite(v))
      bad("invalid parameter '" + tok + "'");
    return v;
  };

  expect_word(kMagic);
  if (read_size() != kFormatVersion) bad("unsupported format version");
  expect_word("sizes");
  std::array<std::size_t, MlpModel::kLayers + 1> sizes{};
  for (auto& s : sizes) s = read_size();
  if (sizes[1] != kHiddenUnits || sizes[2] != kHiddenUnits || sizes[3] != 1 || sizes[0] == 0)
    bad("layer sizes must be [n, 5, 5, 1]");
  expect_word("hidden");
  expect_word("relu");
  expect_word("output");
  expect_word("sigmoid");

  MlpModel m(sizes[0]);
  for (std::size_t l = 0; l < MlpModel::kLayers; ++l) {
    expect_word("weights");
    if (read_size() != l || read_size() != sizes[l + 1] || read_size() != sizes[l]) bad("weights header mismatch");
    for (auto& w : m.weights(l)) w = read_real();
    expect_word("biases");
    if (read_size() != l || read_size() != sizes[l + 1]) bad("biases header mismatch");
    for (auto& b : m.biases(l)) b = read_real();
  }
  std::string trailing;
  if (is >> trailing) bad("trailing content");
  return m;
}

}  // namespace stepfeat
