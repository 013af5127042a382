#include "stepfeat/quantizer.hpp"

#include <algorithm>
#include <optional>
#include <cmath>
#include <string>

#include "stepfeat/error.hpp"

namespace stepfeat {

namespace {

constexpr double kPerfectResidual = 1e-24;

// Population moments of an indexed sequence, two-pass.
template <class At>
std::pair<double, double> mean_var(std::size_t n, At at) {
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += at(i);
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = at(i) - mean;
    var += d * d;
  }
  return {mean, var / static_cast<double>(n)};
}

template <class Ref, class Apx>
Snr snr_impl(std::size_t n, Ref ref, Apx apx) {
  const auto [mean_r, var_r] = mean_var(n, ref);
  const auto [mean_a, var_a] = mean_var(n, apx);
  if (!(var_r > 0.0)) fail(Errc::zero_deviation, "reference has zero standard deviation");
  if (!(var_a > 0.0)) fail(Errc::zero_deviation, "approximation has zero standard deviation");
  const double inv_r = 1.0 / std::sqrt(var_r);
  const double inv_a = 1.0 / std::sqrt(var_a);
  const double norm_var_r = var_r * inv_r * inv_r;
  const auto [mean_d, var_d] = mean_var(n, [&](std::size_t i) { return ref(i) * inv_r - apx(i) * inv_a; });
  (void)mean_d;
  if (var_d <= kPerfectResidual * norm_var_r) return Snr::perfect();
  return Snr::finite(10.0 * std::log10(norm_var_r / var_d));
}

void check_non_negative(std::span<const double> input) {
  for (double v : input)
    if (!(v >= 0.0) || !std::isfinite(v))
      fail(Errc::invalid_argument, "input must be finite and non-negative");
}

void fill_appr(std::span<const double> input, double thresh, std::vector<Level>& out) {
  out.resize(input.size());
  const double upper = 2.0 * thresh;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const double v = input[i];
    out[i] = v >= upper ? Level{2} : (v < thresh ? Level{0} : Level{1});
  }
}

}  // namespace

ThresholdSet::ThresholdSet(double th0, double th1, double th2, double th3)
    : th0_(th0), th1_(th1), th2_(th2), th3_(th3) {
  if (!(std::isfinite(th0) && std::isfinite(th3) && th0 < th1 && th1 < 0.0 && 0.0 < th2 && th2 < th3))
    fail(Errc::invalid_argument, "thresholds must satisfy th0 < th1 < 0 < th2 < th3");
}

ThresholdSet ThresholdSet::coupled(double th1, double th2) {
  return ThresholdSet(2.0 * th1, th1, th2, 2.0 * th2);
}

StepSignal::StepSignal(std::vector<Level> levels) : levels_(std::move(levels)) {
  for (Level l : levels_)
    if (!is_level(l)) fail(Errc::out_of_range, "step level " + std::to_string(l) + " outside [-2, 2]");
}

void SearchConfig::validate() const {
  if (!(start > 0.0 && std::isfinite(start))) fail(Errc::invalid_argument, "search start must be positive");
  if (!(step > 0.0 && std::isfinite(step))) fail(Errc::invalid_argument, "search step must be positive");
}

double Snr::db() const {
  if (perfect_) fail(Errc::out_of_range, "perfect approximation has no finite SNR");
  return db_;
}

std::partial_ordering operator<=>(const Snr& a, const Snr& b) noexcept {
  if (a.perfect_ || b.perfect_) return a.perfect_ <=> b.perfect_;
  return a.db_ <=> b.db_;
}

Level quantize_sample(double a, const ThresholdSet& t) noexcept {
  if (a >= t.th3()) return 2;
  if (a >= t.th2()) return 1;
  if (a >= t.th1()) return 0;
  if (a >= t.th0()) return -1;
  return -2;
}

StepSignal quantize(std::span<const double> samples, const ThresholdSet& t) {
  std::vector<Level> out(samples.size());
  std::transform(samples.begin(), samples.end(), out.begin(),
                 [&](double a) { return quantize_sample(a, t); });
  return StepSignal(std::move(out));
}

Snr snr(std::span<const double> reference, std::span<const double> approx) {
  if (reference.size() != approx.size())
    fail(Errc::dimension_mismatch, "SNR arrays differ in length");
  if (reference.empty()) fail(Errc::invalid_argument, "SNR of empty arrays");
  return snr_impl(
      reference.size(), [&](std::size_t i) { return reference[i]; },
      [&](std::size_t i) { return approx[i]; });
}

std::vector<Level> get_appr(std::span<const double> input, double thresh) {
  if (!(thresh > 0.0 && std::isfinite(thresh))) fail(Errc::invalid_argument, "threshold must be positive");
  check_non_negative(input);
  std::vector<Level> out;
  fill_appr(input, thresh, out);
  return out;
}

ThresholdSearch search_threshold(std::span<const double> input, const SearchConfig& cfg) {
  cfg.validate();
  if (input.empty()) fail(Errc::invalid_argument, "threshold search over empty input");
  check_non_negative(input);

  const auto [mean, var] = mean_var(input.size(), [&](std::size_t i) { return input[i]; });
  (void)mean;
  if (!(var > 0.0)) fail(Errc::zero_deviation, "threshold search input is constant");
  const double sigma = std::sqrt(var);
  const double max_norm = *std::max_element(input.begin(), input.end()) / sigma;

  double start = cfg.start;
  double step = cfg.step;
  if (cfg.units == GridUnits::fraction_of_max) {
    start *= max_norm;
    step *= max_norm;
  }

  // The scan runs on the unit-deviation scale; thresholds are applied to the
  // raw input as t * sigma, which the scale-invariant SNR scores identically.
  std::vector<Level> levels;
  std::optional<ThresholdSearch> best;
  std::size_t scored = 0;
  for (std::size_t i = 0;; ++i) {
    const double t = start + static_cast<double>(i) * step;
    if (!(t < max_norm)) break;
    const double thresh = t * sigma;
    fill_appr(input, thresh, levels);
    const bool constant = std::all_of(levels.begin(), levels.end(), [&](Level l) { return l == levels.front(); });
    if (constant) continue;
    const Snr value = snr_impl(
        input.size(), [&](std::size_t k) { return input[k]; },
        [&](std::size_t k) { return static_cast<double>(levels[k]); });
    ++scored;
    if (!best || value > best->snr) best = ThresholdSearch{thresh, t, value, 0};
  }
  if (!best) fail(Errc::no_scorable_candidate, "no threshold in the scan range yields a non-constant approximation");
  best->candidates_scored = scored;
  return *best;
}

double get_opt_thresh(std::span<const double> input, const SearchConfig& cfg) {
  return search_threshold(input, cfg).threshold;
}

Approximation approximate(std::span<const double> samples, const SearchConfig& cfg) {
  std::vector<double> pos(samples.size());
  std::vector<double> neg(samples.size());  // -Sign_-, non-negative
  bool has_pos = false;
  bool has_neg = false;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double a = samples[i];
    if (!std::isfinite(a)) fail(Errc::invalid_argument, "signal contains a non-finite sample");
    pos[i] = a > 0.0 ? a : 0.0;
    neg[i] = a < 0.0 ? -a : 0.0;
    has_pos |= a > 0.0;
    has_neg |= a < 0.0;
  }
  if (!has_pos || !has_neg)
    fail(Errc::one_sided_signal, "signal needs both strictly positive and strictly negative samples");

  const ThresholdSearch upper = search_threshold(pos, cfg);
  const ThresholdSearch lower = search_threshold(neg, cfg);
  const double th2 = upper.threshold;
  const double th1 = -lower.threshold;

  std::vector<Level> levels;
  std::vector<Level> neg_levels;
  fill_appr(pos, th2, levels);
  fill_appr(neg, -th1, neg_levels);
  for (std::size_t i = 0; i < levels.size(); ++i) levels[i] = static_cast<Level>(levels[i] - neg_levels[i]);

  return Approximation{StepSignal(std::move(levels)), ThresholdSet::coupled(th1, th2), upper.snr, lower.snr};
}

Approximation approximate(const Signal& signal, const SearchConfig& cfg) {
  return approximate(signal.samples(), cfg);
}

}  // namespace stepfeat
