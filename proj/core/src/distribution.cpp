#include "stepfeat/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "stepfeat/error.hpp"

namespace stepfeat {

VectorDistribution::VectorDistribution(std::map<Code, std::uint64_t> counts, std::size_t lw)
    : counts_(std::move(counts)), lw_(lw) {
  const Code bound = code_bound(lw);
  if (counts_.empty()) fail(Errc::invalid_argument, "distribution has no windows");
  for (const auto& [code, n] : counts_) {
    if (code < -bound || code > bound) fail(Errc::out_of_range, "code " + std::to_string(code) + " outside the window interval");
    if (n == 0) fail(Errc::invalid_argument, "distribution count must be positive");
    total_ += n;
  }
  const double total = static_cast<double>(total_);
  for (const auto& [code, n] : counts_) freqs_.emplace_hint(freqs_.end(), code, static_cast<double>(n) / total);
}

VectorDistribution VectorDistribution::from_frequencies(const std::map<Code, double>& freqs, std::size_t lw) {
  const Code bound = code_bound(lw);
  if (freqs.empty()) fail(Errc::invalid_argument, "distribution has no codes");
  double sum = 0.0;
  for (const auto& [code, f] : freqs) {
    if (code < -bound || code > bound) fail(Errc::out_of_range, "code " + std::to_string(code) + " outside the window interval");
    if (!(f >= 0.0 && std::isfinite(f))) fail(Errc::invalid_argument, "frequency must be finite and non-negative");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) fail(Errc::invalid_argument, "frequencies must sum to 1");
  VectorDistribution d;
  d.lw_ = lw;
  d.freqs_ = freqs;
  return d;
}

double VectorDistribution::frequency(Code code) const noexcept {
  auto it = freqs_.find(code);
  return it == freqs_.end() ? 0.0 : it->second;
}

std::uint64_t VectorDistribution::count(Code code) const noexcept {
  auto it = counts_.find(code);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t histogram_bin(Code code, std::size_t lw) {
  const Code bound = code_bound(lw);
  if (code < -bound || code > bound) fail(Errc::out_of_range, "code outside the window interval");
  // Exact integer arithmetic: 30 * 2 * bound < 2^63 for lw <= kMaxWindow.
  const Code bin = (code + bound) * static_cast<Code>(kHistogramBins) / (2 * bound);
  return std::min(static_cast<std::size_t>(bin), kHistogramBins - 1);
}

CodeHistogram histogram(const StepSignal& s, std::size_t lw) {
  const auto codes = window_codes(s, lw);
  const Code bound = code_bound(lw);

  CodeHistogram h{};
  h.lw = lw;
  const double lo = -static_cast<double>(bound);
  const double width = 2.0 * static_cast<double>(bound) / static_cast<double>(kHistogramBins);
  for (std::size_t i = 0; i <= kHistogramBins; ++i) h.bin_edges[i] = lo + width * static_cast<double>(i);
  h.bin_edges[kHistogramBins] = static_cast<double>(bound);

  std::array<std::uint64_t, kHistogramBins> counts{};
  for (Code c : codes) ++counts[histogram_bin(c, lw)];
  const double total = static_cast<double>(codes.size());
  for (std::size_t i = 0; i < kHistogramBins; ++i) h.bin_values[i] = static_cast<double>(counts[i]) / total;
  return h;
}

VectorDistribution vector_frequencies(const StepSignal& s, std::size_t lw) {
  std::map<Code, std::uint64_t> counts;
  for (Code c : window_codes(s, lw)) ++counts[c];
  return VectorDistribution(std::move(counts), lw);
}

double symmetry_defect(const VectorDistribution& d) {
  double defect = 0.0;
  const auto& freqs = d.frequencies();
  for (const auto& [code, f] : freqs) {
    auto mirror = freqs.find(-code);
    if (mirror == freqs.end()) {
      defect += 2.0 * f;  // this code's term and its absent mirror's term
    } else {
      defect += std::abs(f - mirror->second);
    }
  }
  return defect;
}

std::array<Code, 5> constant_codes(std::size_t lw) {
  const Code ones = (code_bound(lw) * 2) / 4;  // (5^lw - 1) / 4
  return {-2 * ones, -ones, 0, ones, 2 * ones};
}

double constant_vector_mass(const VectorDistribution& d) {
  double mass = 0.0;
  for (Code c : constant_codes(d.lw())) mass += d.frequency(c);
  return mass;
}

RunReport constant_runs(const StepSignal& s, Level level) {
  if (!is_level(level)) fail(Errc::out_of_range, "run level outside [-2, 2]");
  RunReport report{level, {}};
  std::size_t run = 0;
  for (Level l : s.levels()) {
    if (l == level) {
      ++run;
    } else if (run > 0) {
      report.lengths.push_back(run);
      run = 0;
    }
  }
  if (run > 0) report.lengths.push_back(run);
  std::sort(report.lengths.begin(), report.lengths.end(), std::greater<>());
  return report;
}

}  // namespace stepfeat
