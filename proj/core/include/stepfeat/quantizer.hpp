#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stepfeat/signal.hpp"

namespace stepfeat {

/// One element of the level alphabet {-2, -1, 0, 1, 2}.
using Level = std::int8_t;

inline constexpr Level kMinLevel = -2;
inline constexpr Level kMaxLevel = 2;

constexpr bool is_level(int v) noexcept { return v >= kMinLevel && v <= kMaxLevel; }

/// The four quantization thresholds. Construction enforces
/// th0 < th1 < 0 < th2 < th3.
class ThresholdSet {
 public:
  ThresholdSet(double th0, double th1, double th2, double th3);

  /// th0 = 2 * th1, th3 = 2 * th2; the coupling used by the threshold search.
  static ThresholdSet coupled(double th1, double th2);

  double th0() const noexcept { return th0_; }
  double th1() const noexcept { return th1_; }
  double th2() const noexcept { return th2_; }
  double th3() const noexcept { return th3_; }

  friend bool operator==(const ThresholdSet&, const ThresholdSet&) = default;

 private:
  double th0_, th1_, th2_, th3_;
};

/// Five-level approximation of a signal; every element is a valid Level.
class StepSignal {
 public:
  explicit StepSignal(std::vector<Level> levels);

  std::span<const Level> levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  Level operator[](std::size_t i) const noexcept { return levels_[i]; }

  friend bool operator==(const StepSignal&, const StepSignal&) = default;

 private:
  std::vector<Level> levels_;
};

/// How SearchConfig::start and ::step are interpreted.
enum class GridUnits {
  /// Multiples of max(normalized input); the default grid.
  fraction_of_max,
  /// Absolute values on the unit-deviation scale of the normalized input.
  normalized,
};

struct SearchConfig {
  double start = 0.05;
  double step = 0.01;
  GridUnits units = GridUnits::fraction_of_max;

  /// Throws invalid_argument unless start > 0 and step > 0 (both finite).
  void validate() const;
};

/// Signal-to-noise ratio in dB, or the "perfect approximation" outcome when
/// the residual vanishes after normalization. Perfect orders above every
/// finite value.
class Snr {
 public:
  static Snr finite(double db) noexcept { return Snr(db, false); }
  static Snr perfect() noexcept { return Snr(0.0, true); }

  bool is_perfect() const noexcept { return perfect_; }
  /// dB value; throws out_of_range for a perfect outcome.
  double db() const;

  friend std::partial_ordering operator<=>(const Snr& a, const Snr& b) noexcept;
  friend bool operator==(const Snr& a, const Snr& b) noexcept {
    return (a <=> b) == 0;
  }

 private:
  Snr(double db, bool perfect) noexcept : db_(db), perfect_(perfect) {}
  double db_;
  bool perfect_;
};

/// Level of a single amplitude under the closed-lower-bound five-branch rule.
Level quantize_sample(double a, const ThresholdSet& t) noexcept;

/// quantize_sample applied element-wise.
StepSignal quantize(std::span<const double> samples, const ThresholdSet& t);

/// Both arrays are scaled to unit (population) standard deviation, then
/// 10 log10(var(ref) / var(ref - approx)). Residual variance below 1e-24 of
/// the reference variance is reported as Snr::perfect().
///
/// Throws dimension_mismatch on unequal lengths and zero_deviation when
/// either array is constant.
Snr snr(std::span<const double> reference, std::span<const double> approx);

/// Three-level approximation of a non-negative sequence: 2 where
/// x >= 2*thresh, 0 where x < thresh, 1 otherwise.
std::vector<Level> get_appr(std::span<const double> input, double thresh);

struct ThresholdSearch {
  /// Best threshold in the units of the (unnormalized) input.
  double threshold;
  /// The same threshold on the unit-deviation scale the grid runs over.
  double normalized_threshold;
  Snr snr;
  std::size_t candidates_scored;
};

/// Grid scan over thresholds start, start+step, ... while below
/// max(normalized input). Each candidate three-level approximation is
/// normalized and scored against the normalized input; constant candidates
/// are skipped. The first strictly best candidate wins.
///
/// Grid points are computed as start + i*step, not by repeated addition.
///
/// Throws invalid_argument (negative element or bad config), zero_deviation
/// (constant input) or no_scorable_candidate.
ThresholdSearch search_threshold(std::span<const double> input,
                                 const SearchConfig& cfg = {});

/// search_threshold(...).threshold
double get_opt_thresh(std::span<const double> input, const SearchConfig& cfg = {});

struct Approximation {
  StepSignal levels;
  ThresholdSet thresholds;
  Snr positive_snr;
  Snr negative_snr;
};

/// Splits the signal into its non-negative and non-positive parts, searches
/// th2 on the former and -th1 on the negated latter, and combines
/// get_appr(pos, th2) - get_appr(-neg, -th1). The result agrees with
/// quantize(samples, thresholds) except for a negative sample lying exactly
/// on th0 or th1, which the combination places one level lower.
///
/// Throws one_sided_signal when the signal lacks a strictly positive or a
/// strictly negative sample.
Approximation approximate(std::span<const double> samples, const SearchConfig& cfg = {});
Approximation approximate(const Signal& signal, const SearchConfig& cfg = {});

}  // namespace stepfeat
