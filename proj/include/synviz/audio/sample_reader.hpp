#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace synviz::audio {

/// Pull-based mono sample stream. Multichannel readers mix down to the
/// arithmetic mean of their channels and clamp to [-1, 1].
class SampleReader {
 public:
  virtual ~SampleReader() = default;

  /// Fills up to out.size() mono samples, returns how many were written.
  /// Zero means end of stream.
  virtual std::size_t read(std::span<double> out) = 0;

  virtual double sample_rate() const = 0;
  /// Channel count of the underlying data before mixdown.
  virtual int channels() const = 0;
  /// Total mono samples, if known up front.
  virtual std::optional<std::uint64_t> total_samples() const = 0;
};

/// Reads from an in-memory mono buffer.
class MemoryReader final : public SampleReader {
 public:
  MemoryReader(std::vector<double> mono, double sample_rate);

  std::size_t read(std::span<double> out) override;
  double sample_rate() const override { return rate_; }
  int channels() const override { return 1; }
  std::optional<std::uint64_t> total_samples() const override {
    return samples_.size();
  }

 private:
  std::vector<double> samples_;
  double rate_;
  std::size_t pos_ = 0;
};

/// Interleaved little-endian 32-bit float PCM from a byte stream (e.g. stdin).
class RawPcmReader final : public SampleReader {
 public:
  RawPcmReader(std::istream& in, int channels, double sample_rate);

  std::size_t read(std::span<double> out) override;
  double sample_rate() const override { return rate_; }
  int channels() const override { return channels_; }
  std::optional<std::uint64_t> total_samples() const override {
    return std::nullopt;
  }

 private:
  std::istream& in_;
  int channels_;
  double rate_;
  std::vector<unsigned char> bytes_;
};

/// Linear-interpolation sample rate converter over another reader.
class LinearResampler final : public SampleReader {
 public:
  LinearResampler(std::unique_ptr<SampleReader> inner, double target_rate);

  std::size_t read(std::span<double> out) override;
  double sample_rate() const override { return target_rate_; }
  int channels() const override { return inner_->channels(); }
  std::optional<std::uint64_t> total_samples() const override;

 private:
  bool ensure(std::uint64_t index);

  std::unique_ptr<SampleReader> inner_;
  double target_rate_;
  double step_;
  std::vector<double> buf_;
  std::uint64_t buf_start_ = 0;
  bool inner_done_ = false;
  std::uint64_t out_pos_ = 0;
};

/// Mean of `channels` interleaved values per frame, clamped to [-1, 1].
void mix_down(std::span<const double> interleaved, int channels,
              std::span<double> mono);

}  // namespace synviz::audio
