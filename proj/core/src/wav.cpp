#include "stepfeat/wav.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>

#include "stepfeat/error.hpp"

namespace stepfeat {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

// Tail of KSDATAFORMAT_SUBTYPE_PCM after the 2-byte format tag.
constexpr std::array<std::uint8_t, 14> kPcmGuidTail = {
    0x00, 0x00, 0x00, 0x00, 0x10, 0x00, 0x80, 0x00, 0x00, 0xAA, 0x00, 0x38, 0x9B, 0x71};

class Reader {
 public:
  explicit Reader(std::span<const std::byte> bytes) : bytes_(bytes) {}

  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  std::size_t pos() const noexcept { return pos_; }

  std::span<const std::byte> take(std::size_t n) {
    if (remaining() < n) fail(Errc::malformed_wav, "WAV file is truncated");
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::uint32_t u32() { return le(take(4)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(le(take(2))); }

  bool tag(std::string_view expected) {
    auto t = take(4);
    return std::memcmp(t.data(), expected.data(), 4) == 0;
  }

  static std::uint32_t le(std::span<const std::byte> b) {
    std::uint32_t v = 0;
    for (std::size_t i = b.size(); i-- > 0;) v = (v << 8) | std::to_integer<std::uint32_t>(b[i]);
    return v;
  }

 private:
  std::span<const std::byte> bytes_;
  std::size_t pos_ = 0;
};

struct Format {
  std::uint16_t tag;
  std::uint16_t channels;
  std::uint32_t sample_rate;
  std::uint16_t block_align;
  std::uint16_t bits;
  std::optional<std::uint16_t> sub_format;
  bool pcm_guid = false;
};

Format parse_fmt(std::span<const std::byte> chunk) {
  if (chunk.size() < 16) fail(Errc::malformed_wav, "fmt chunk shorter than 16 bytes");
  Reader r(chunk);
  Format f{};
  f.tag = r.u16();
  f.channels = r.u16();
  f.sample_rate = r.u32();
  r.u32();  // byte rate
  f.block_align = r.u16();
  f.bits = r.u16();
  if (f.tag == kFormatExtensible) {
    if (chunk.size() < 40) fail(Errc::malformed_wav, "extensible fmt chunk shorter than 40 bytes");
    r.u16();  // cbSize
    r.u16();  // valid bits
    r.u32();  // channel mask
    f.sub_format = r.u16();
    auto tail = r.take(kPcmGuidTail.size());
    f.pcm_guid = std::equal(tail.begin(), tail.end(), kPcmGuidTail.begin(),
                            [](std::byte a, std::uint8_t b) { return std::to_integer<std::uint8_t>(a) == b; });
  }
  return f;
}

double read_sample(const std::byte* p, std::uint16_t bytes) {
  switch (bytes) {
    case 1:
      return (std::to_integer<int>(p[0]) - 128) / 128.0;
    case 2: {
      auto v = static_cast<std::int16_t>(std::to_integer<std::uint16_t>(p[0]) |
                                         (std::to_integer<std::uint16_t>(p[1]) << 8));
      return v / 32768.0;
    }
    default: {
      std::uint32_t u = std::to_integer<std::uint32_t>(p[0]) |
                        (std::to_integer<std::uint32_t>(p[1]) << 8) |
                        (std::to_integer<std::uint32_t>(p[2]) << 16);
      auto v = static_cast<std::int32_t>(u << 8) >> 8;  // sign-extend 24 bits
      return v / 8388608.0;
    }
  }
}

void put_u32(std::vector<std::byte>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
}
void put_u16(std::vector<std::byte>& out, std::uint16_t v) {
  out.push_back(static_cast<std::byte>(v & 0xFF));
  out.push_back(static_cast<std::byte>(v >> 8));
}
void put_tag(std::vector<std::byte>& out, std::string_view tag) {
  for (char c : tag) out.push_back(static_cast<std::byte>(c));
}

}  // namespace

Signal decode_wav(std::span<const std::byte> bytes) {
  Reader r(bytes);
  if (bytes.size() < 12 || !r.tag("RIFF")) fail(Errc::malformed_wav, "missing RIFF header");
  r.u32();
  if (!r.tag("WAVE")) fail(Errc::malformed_wav, "RIFF form type is not WAVE");

  std::optional<Format> fmt;
  std::optional<std::span<const std::byte>> data;
  while (r.remaining() >= 8 && !(fmt && data)) {
    auto id = r.take(4);
    std::uint32_t size = r.u32();
    std::string name(reinterpret_cast<const char*>(id.data()), 4);
    if (name == "data") {
      // Some writers leave the size at 0xFFFFFFFF or overstate it when streaming.
      data = r.take(std::min<std::size_t>(size, r.remaining()));
    } else {
      auto chunk = r.take(size);
      if (name == "fmt ") fmt = parse_fmt(chunk);
    }
    if ((size & 1) && r.remaining() > 0) r.take(1);
  }
  if (!fmt) fail(Errc::malformed_wav, "no fmt chunk");
  if (!data) fail(Errc::malformed_wav, "no data chunk");

  bool pcm = fmt->tag == kFormatPcm ||
             (fmt->tag == kFormatExtensible && fmt->sub_format == kFormatPcm && fmt->pcm_guid);
  if (!pcm)
    fail(Errc::unsupported_encoding,
         "unsupported WAV encoding (format tag " + std::to_string(fmt->sub_format.value_or(fmt->tag)) +
             "); only integer PCM is read");
  if (fmt->bits != 8 && fmt->bits != 16 && fmt->bits != 24)
    fail(Errc::unsupported_encoding,
         "unsupported PCM bit depth " + std::to_string(fmt->bits) + "; expected 8, 16 or 24");
  if (fmt->channels == 0) fail(Errc::malformed_wav, "fmt chunk declares zero channels");
  if (fmt->sample_rate == 0) fail(Errc::malformed_wav, "fmt chunk declares zero sample rate");

  const std::uint16_t sample_bytes = fmt->bits / 8;
  const std::size_t frame_bytes = static_cast<std::size_t>(sample_bytes) * fmt->channels;
  const std::size_t frames = data->size() / frame_bytes;
  if (frames == 0) fail(Errc::empty_data, "WAV data chunk holds no complete frame");

  std::vector<double> samples(frames);
  const std::byte* p = data->data();
  for (std::size_t i = 0; i < frames; ++i) {
    double sum = 0.0;
    for (std::uint16_t c = 0; c < fmt->channels; ++c, p += sample_bytes) sum += read_sample(p, sample_bytes);
    samples[i] = sum / fmt->channels;
  }
  return Signal(std::move(samples), fmt->sample_rate);
}

Signal load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path.string());
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(Errc::io_error, "cannot read " + path.string());
  return decode_wav(std::as_bytes(std::span(raw)));
}

std::vector<std::byte> encode_wav_pcm16(std::span<const double> samples, std::uint32_t sample_rate_hz) {
  const auto data_bytes = static_cast<std::uint32_t>(samples.size() * 2);
  std::vector<std::byte> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);
  put_u32(out, sample_rate_hz);
  put_u32(out, sample_rate_hz * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (double s : samples) {
    double scaled = std::round(std::clamp(s, -1.0, 1.0) * 32768.0);
    auto v = static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
    put_u16(out, static_cast<std::uint16_t>(v));
  }
  return out;
}

void write_wav_pcm16(const std::filesystem::path& path, const Signal& signal) {
  auto bytes = encode_wav_pcm16(signal.samples(), signal.sample_rate_hz());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(Errc::io_error, "cannot write " + path.string());
}

}  // namespace stepfeat
