#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "stepfeat/quantizer.hpp"
#include "stepfeat/vector_codec.hpp"

namespace stepfeat {

inline constexpr std::size_t kHistogramBins = 30;

/// Equal-width histogram of window codes over [-code_bound, code_bound].
struct CodeHistogram {
  std::size_t lw;
  std::array<double, kHistogramBins + 1> bin_edges;
  std::array<double, kHistogramBins> bin_values;

  double bin_center(std::size_t i) const noexcept {
    return 0.5 * (bin_edges[i] + bin_edges[i + 1]);
  }
};

/// Exact per-code window counts; relative frequencies derive from them.
class VectorDistribution {
 public:
  /// counts must be non-empty, every count positive and every key within
  /// code_bound(lw).
  VectorDistribution(std::map<Code, std::uint64_t> counts, std::size_t lw);

  /// Builds a distribution directly from relative frequencies, keeping only
  /// the frequency view (count() returns 0). Frequencies must sum to 1
  /// within 1e-9.
  static VectorDistribution from_frequencies(const std::map<Code, double>& freqs,
                                             std::size_t lw);

  std::size_t lw() const noexcept { return lw_; }
  std::uint64_t total_windows() const noexcept { return total_; }

  /// Ascending by code.
  const std::map<Code, double>& frequencies() const noexcept { return freqs_; }
  double frequency(Code code) const noexcept;
  std::uint64_t count(Code code) const noexcept;

 private:
  VectorDistribution() = default;

  std::map<Code, std::uint64_t> counts_;
  std::map<Code, double> freqs_;
  std::uint64_t total_ = 0;
  std::size_t lw_ = 0;
};

struct RunReport {
  Level level;
  /// Maximal run lengths, non-increasing.
  std::vector<std::size_t> lengths;
};

/// Histogram bin for a code: floor(30 * (code + B) / (2B)), with the top
/// edge folded into the last bin.
std::size_t histogram_bin(Code code, std::size_t lw);

/// Bins every window code into 30 bins over the full code interval and
/// normalizes by the window count.
CodeHistogram histogram(const StepSignal& s, std::size_t lw);

VectorDistribution vector_frequencies(const StepSignal& s, std::size_t lw);

/// sum over codes of |fr(c) - fr(-c)|; 0 for a sign-symmetric distribution,
/// at most 2.
double symmetry_defect(const VectorDistribution& d);

/// Codes of the five constant windows <v, ..., v>, v = -2..2, ascending.
std::array<Code, 5> constant_codes(std::size_t lw);

/// Total relative frequency of the five constant windows.
double constant_vector_mass(const VectorDistribution& d);

/// Maximal runs of `level` in s, longest first. Empty when level is absent.
RunReport constant_runs(const StepSignal& s, Level level);

}  // namespace stepfeat
