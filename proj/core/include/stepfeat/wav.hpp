#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "stepfeat/signal.hpp"

namespace stepfeat {

/// Reads a RIFF/WAVE file holding 8, 16 or 24-bit integer PCM.
///
/// Samples are scaled by the format's full-scale value (128, 32768, 8388608)
/// so they land in [-1, 1]; multi-channel frames are averaged to mono.
/// WAVE_FORMAT_EXTENSIBLE is accepted when its sub-format is PCM.
///
/// Throws Error with io_error (unreadable), malformed_wav (not RIFF/WAVE or
/// truncated chunks), unsupported_encoding (float, A-law, other bit depths)
/// or empty_data (data chunk of zero frames).
Signal load_wav(const std::filesystem::path& path);

/// Same as load_wav, over an in-memory image of the file.
Signal decode_wav(std::span<const std::byte> bytes);

/// Encodes samples as mono 16-bit PCM. Values are clamped to [-1, 1] and
/// rounded to the nearest step of 1/32768.
std::vector<std::byte> encode_wav_pcm16(std::span<const double> samples,
                                        std::uint32_t sample_rate_hz);

void write_wav_pcm16(const std::filesystem::path& path, const Signal& signal);

}  // namespace stepfeat
