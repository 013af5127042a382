#include "stepfeat/generators.hpp"

#include <algorithm>
#include <cmath>

#include "stepfeat/error.hpp"
#include "stepfeat/random.hpp"

namespace stepfeat {

namespace {

std::vector<double> uniform_stream(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = rng.uniform(-1.0, 1.0);
  return out;
}

}  // namespace

Signal gen_white_noise(std::size_t n, std::uint64_t seed, std::uint32_t sample_rate_hz) {
  if (n == 0) fail(Errc::invalid_argument, "white noise length must be at least 1");
  return Signal(uniform_stream(n, seed), sample_rate_hz);
}

Signal gen_correlated(std::size_t n, std::size_t smoothing, std::uint64_t seed,
                      std::uint32_t sample_rate_hz) {
  if (smoothing == 0) fail(Errc::invalid_argument, "smoothing window must be at least 1");
  if (n < smoothing) fail(Errc::invalid_argument, "signal length is shorter than the smoothing window");

  const auto noise = uniform_stream(n + smoothing - 1, seed);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < smoothing; ++k) sum += noise[i + k];
    out[i] = sum / static_cast<double>(smoothing);
  }

  double peak = 0.0;
  for (double v : out) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) fail(Errc::zero_deviation, "smoothed noise is identically zero");
  for (auto& v : out) v /= peak;
  return Signal(std::move(out), sample_rate_hz);
}

}  // namespace stepfeat
