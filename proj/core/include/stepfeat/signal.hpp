#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stepfeat {

/// Real-valued sample sequence with its sample rate.
///
/// Construction validates that the sequence is non-empty and that every
/// sample is finite; a Signal is immutable afterwards.
class Signal {
 public:
  Signal(std::vector<double> samples, std::uint32_t sample_rate_hz);

  std::span<const double> samples() const noexcept { return samples_; }
  std::uint32_t sample_rate_hz() const noexcept { return sample_rate_hz_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }

 private:
  std::vector<double> samples_;
  std::uint32_t sample_rate_hz_;
};

inline constexpr std::uint32_t kDefaultSampleRate = 44100;

}  // namespace stepfeat
