#include "synviz/audio/wav.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>

#include "synviz/error.hpp"

namespace synviz::audio {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

std::uint16_t le16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

void put_le(std::vector<unsigned char>& out, std::uint32_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

}  // namespace

WavReader::WavReader(const std::filesystem::path& path)
    : file_(path, std::ios::binary), path_(path) {
  const std::string name = path.string();
  if (!file_) throw AudioError("cannot open audio file: " + name);

  std::array<unsigned char, 12> riff{};
  if (!file_.read(reinterpret_cast<char*>(riff.data()), riff.size()) ||
      std::memcmp(riff.data(), "RIFF", 4) != 0 ||
      std::memcmp(riff.data() + 8, "WAVE", 4) != 0) {
    throw AudioError("not a RIFF/WAVE file: " + name);
  }

  bool have_fmt = false;
  std::uint16_t tag = 0;
  std::uint16_t block_align = 0;
  for (;;) {
    std::array<unsigned char, 8> hdr{};
    if (!file_.read(reinterpret_cast<char*>(hdr.data()), hdr.size())) {
      throw AudioError("no data chunk in " + name);
    }
    const std::uint32_t size = le32(hdr.data() + 4);
    if (std::memcmp(hdr.data(), "fmt ", 4) == 0) {
      if (size < 16) throw AudioError("fmt chunk too short in " + name);
      std::vector<unsigned char> fmt(size + (size & 1));
      if (!file_.read(reinterpret_cast<char*>(fmt.data()),
                      static_cast<std::streamsize>(fmt.size()))) {
        throw AudioError("truncated fmt chunk in " + name);
      }
      tag = le16(fmt.data());
      format_.channels = le16(fmt.data() + 2);
      format_.sample_rate = static_cast<int>(le32(fmt.data() + 4));
      block_align = le16(fmt.data() + 12);
      format_.bits_per_sample = le16(fmt.data() + 14);
      if (tag == kFormatExtensible) {
        if (size < 40) throw AudioError("extensible fmt chunk too short in " + name);
        // First two bytes of the sub-format GUID carry the real format tag.
        tag = le16(fmt.data() + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(hdr.data(), "data", 4) == 0) {
      if (!have_fmt) throw AudioError("data chunk before fmt chunk in " + name);
      if (size != 0 && size != 0xFFFFFFFFu) {
        format_.frame_count = size / block_align;
      }
      break;
    } else {
      file_.seekg(size + (size & 1), std::ios::cur);
    }
  }

  if (tag == kFormatPcm) {
    format_.encoding = WavEncoding::pcm_int;
    const int b = format_.bits_per_sample;
    if (b != 16 && b != 24 && b != 32) {
      throw AudioError("unsupported PCM bit depth " + std::to_string(b) + " in " + name);
    }
  } else if (tag == kFormatFloat) {
    format_.encoding = WavEncoding::ieee_float;
    if (format_.bits_per_sample != 32) {
      throw AudioError("unsupported float bit depth " +
                       std::to_string(format_.bits_per_sample) + " in " + name);
    }
  } else {
    throw AudioError("unsupported codec (format tag " + std::to_string(tag) + ") in " + name);
  }
  if (format_.channels < 1) throw AudioError("zero channels in " + name);
  if (block_align != format_.channels * format_.bits_per_sample / 8) {
    throw AudioError("inconsistent block alignment in " + name);
  }
  frames_left_ = format_.frame_count;
}

double WavReader::decode(const unsigned char* p) const {
  switch (format_.bits_per_sample) {
    case 16:
      return static_cast<std::int16_t>(le16(p)) / 32768.0;
    case 24: {
      std::int32_t v = static_cast<std::int32_t>(p[0] | p[1] << 8 | p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    default:
      if (format_.encoding == WavEncoding::ieee_float) {
        return static_cast<double>(std::bit_cast<float>(le32(p)));
      }
      return static_cast<std::int32_t>(le32(p)) / 2147483648.0;
  }
}

std::size_t WavReader::read(std::span<double> out) {
  std::size_t frames = out.size();
  if (frames_left_) frames = static_cast<std::size_t>(std::min<std::uint64_t>(frames, *frames_left_));
  if (frames == 0) return 0;

  const std::size_t width = static_cast<std::size_t>(format_.bits_per_sample / 8);
  const std::size_t ch = static_cast<std::size_t>(format_.channels);
  bytes_.resize(frames * ch * width);
  file_.read(reinterpret_cast<char*>(bytes_.data()), static_cast<std::streamsize>(bytes_.size()));
  const std::size_t got = static_cast<std::size_t>(file_.gcount()) / (ch * width);
  if (frames_left_) {
    if (got < frames) {
      throw AudioError("decode failure: data chunk truncated in " + path_.string());
    }
    *frames_left_ -= got;
  }

  frame_buf_.resize(got * ch);
  for (std::size_t i = 0; i < frame_buf_.size(); ++i) {
    frame_buf_[i] = decode(bytes_.data() + i * width);
  }
  mix_down(frame_buf_, format_.channels, out.first(got));
  return got;
}

void write_wav(const std::filesystem::path& path,
               std::span<const double> interleaved, int channels,
               int sample_rate, WavSampleFormat format) {
  const int bits = format == WavSampleFormat::pcm16 ? 16 : format == WavSampleFormat::pcm24 ? 24 : 32;
  const std::uint16_t tag = format == WavSampleFormat::float32 ? kFormatFloat : kFormatPcm;
  const auto width = static_cast<std::uint32_t>(bits / 8);
  const auto data_bytes = static_cast<std::uint32_t>(interleaved.size()) * width;

  std::vector<unsigned char> out;
  out.reserve(44 + data_bytes);
  for (char c : std::string_view("RIFF")) out.push_back(static_cast<unsigned char>(c));
  put_le(out, 36 + data_bytes, 4);
  for (char c : std::string_view("WAVEfmt ")) out.push_back(static_cast<unsigned char>(c));
  put_le(out, 16, 4);
  put_le(out, tag, 2);
  put_le(out, static_cast<std::uint32_t>(channels), 2);
  put_le(out, static_cast<std::uint32_t>(sample_rate), 4);
  put_le(out, static_cast<std::uint32_t>(sample_rate * channels) * width, 4);
  put_le(out, static_cast<std::uint32_t>(channels) * width, 2);
  put_le(out, static_cast<std::uint32_t>(bits), 2);
  for (char c : std::string_view("data")) out.push_back(static_cast<unsigned char>(c));
  put_le(out, data_bytes, 4);

  for (double s : interleaved) {
    const double x = std::clamp(s, -1.0, 1.0);
    switch (format) {
      case WavSampleFormat::pcm16: {
        const auto v = static_cast<std::int32_t>(std::lround(std::clamp(x * 32768.0, -32768.0, 32767.0)));
        put_le(out, static_cast<std::uint32_t>(v), 2);
        break;
      }
      case WavSampleFormat::pcm24: {
        const auto v = static_cast<std::int32_t>(std::lround(std::clamp(x * 8388608.0, -8388608.0, 8388607.0)));
        put_le(out, static_cast<std::uint32_t>(v), 3);
        break;
      }
      case WavSampleFormat::float32:
        put_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(x)), 4);
        break;
    }
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw AudioError("cannot write audio file: " + path.string());
  file.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!file) throw AudioError("write failed: " + path.string());
}

}  // namespace synviz::audio
