#pragma once

#include <cstddef>
#include <cstdint>

#include "stepfeat/signal.hpp"

namespace stepfeat {

/// n samples uniform on [-1, 1] from a SplitMix64-seeded xoshiro256**
/// stream. gen_white_noise(n, s) is a prefix of gen_white_noise(m, s) for
/// n <= m.
Signal gen_white_noise(std::size_t n, std::uint64_t seed,
                       std::uint32_t sample_rate_hz = kDefaultSampleRate);

/// Moving average of `smoothing` taps over the white-noise stream of the same
/// seed, rescaled so that max |sample| == 1. The stream is drawn n+smoothing-1
/// long so every output averages a full window; smoothing == 1 is therefore
/// the rescaled gen_white_noise(n, seed).
Signal gen_correlated(std::size_t n, std::size_t smoothing, std::uint64_t seed,
                      std::uint32_t sample_rate_hz = kDefaultSampleRate);

}  // namespace stepfeat
