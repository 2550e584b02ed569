#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <vector>

#include "synviz/audio/sample_reader.hpp"

namespace synviz::audio {

enum class WavEncoding { pcm_int, ieee_float };

struct WavFormat {
  WavEncoding encoding = WavEncoding::pcm_int;
  int channels = 0;
  int sample_rate = 0;
  int bits_per_sample = 0;
  /// Sample frames in the data chunk; nullopt for streamed files with an
  /// open-ended data size.
  std::optional<std::uint64_t> frame_count;
};

/// Streaming RIFF/WAVE reader: 16/24/32-bit integer PCM and 32-bit float,
/// including WAVE_FORMAT_EXTENSIBLE wrappers of those.
class WavReader final : public SampleReader {
 public:
  explicit WavReader(const std::filesystem::path& path);

  const WavFormat& format() const { return format_; }

  std::size_t read(std::span<double> out) override;
  double sample_rate() const override { return format_.sample_rate; }
  int channels() const override { return format_.channels; }
  std::optional<std::uint64_t> total_samples() const override {
    return format_.frame_count;
  }

 private:
  double decode(const unsigned char* p) const;

  std::ifstream file_;
  std::filesystem::path path_;
  WavFormat format_;
  std::optional<std::uint64_t> frames_left_;
  std::vector<unsigned char> bytes_;
  std::vector<double> frame_buf_;
};

enum class WavSampleFormat { pcm16, pcm24, float32 };

/// Writes interleaved samples in [-1, 1] as a canonical WAV file.
void write_wav(const std::filesystem::path& path,
               std::span<const double> interleaved, int channels,
               int sample_rate, WavSampleFormat format = WavSampleFormat::pcm16);

}  // namespace synviz::audio
