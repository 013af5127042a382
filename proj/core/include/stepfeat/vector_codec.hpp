#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stepfeat/quantizer.hpp"

namespace stepfeat {

using Code = std::int64_t;

/// Largest supported window; 30 * 5^20 still fits in an int64, which the
/// histogram binning relies on.
inline constexpr std::size_t kMaxWindow = 20;

/// (5^lw - 1) / 2, the largest magnitude a code of window length lw can take.
Code code_bound(std::size_t lw);

/// A window of levels, 1 <= length <= kMaxWindow.
class WindowVector {
 public:
  explicit WindowVector(std::vector<Level> digits);

  std::span<const Level> digits() const noexcept { return digits_; }
  std::size_t lw() const noexcept { return digits_.size(); }
  Level operator[](std::size_t k) const noexcept { return digits_[k]; }

  WindowVector operator-() const;

  friend bool operator==(const WindowVector&, const WindowVector&) = default;

 private:
  std::vector<Level> digits_;
};

/// Integer identifier of a window, |value| <= code_bound(lw).
class VectorCode {
 public:
  VectorCode(Code value, std::size_t lw);

  Code value() const noexcept { return value_; }
  std::size_t lw() const noexcept { return lw_; }

  friend bool operator==(const VectorCode&, const VectorCode&) = default;

 private:
  Code value_;
  std::size_t lw_;
};

/// sum_k digits[k] * 5^k. Throws out_of_range on a digit outside [-2, 2]
/// and invalid_argument on an empty or over-long span.
Code encode(std::span<const Level> digits);
VectorCode encode(const WindowVector& v);

/// Balanced base-5 digit extraction; the inverse of encode.
WindowVector decode(const VectorCode& c);
WindowVector decode(Code value, std::size_t lw);

/// All length-lw windows of s at stride 1, in order: s.size() - lw + 1 of
/// them. Throws invalid_argument when s is shorter than lw.
std::vector<WindowVector> windows(const StepSignal& s, std::size_t lw);

/// encode() of every window, computed with a rolling update.
std::vector<Code> window_codes(const StepSignal& s, std::size_t lw);

}  // namespace stepfeat
