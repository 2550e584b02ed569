#include "synviz/audio/sample_reader.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include "synviz/audio/sample_hop.hpp"
#include "synviz/error.hpp"

namespace synviz::audio {

double rms_db(const SampleHop& hop, double floor_db) {
  double sum_sq = 0.0;
  for (double s : hop.samples) sum_sq += s * s;
  const double rms = std::sqrt(sum_sq / static_cast<double>(hop.samples.size()));
  if (rms <= 0.0) return floor_db;
  return std::max(20.0 * std::log10(rms), floor_db);
}

void mix_down(std::span<const double> interleaved, int channels,
              std::span<double> mono) {
  const auto ch = static_cast<std::size_t>(channels);
  for (std::size_t i = 0; i < mono.size(); ++i) {
    double sum = 0.0;
    for (std::size_t c = 0; c < ch; ++c) sum += interleaved[i * ch + c];
    mono[i] = std::clamp(sum / static_cast<double>(ch), -1.0, 1.0);
  }
}

MemoryReader::MemoryReader(std::vector<double> mono, double sample_rate)
    : samples_(std::move(mono)), rate_(sample_rate) {
  for (double& s : samples_) s = std::clamp(s, -1.0, 1.0);
}

std::size_t MemoryReader::read(std::span<double> out) {
  const std::size_t n = std::min(out.size(), samples_.size() - pos_);
  std::copy_n(samples_.begin() + static_cast<std::ptrdiff_t>(pos_), n, out.begin());
  pos_ += n;
  return n;
}

RawPcmReader::RawPcmReader(std::istream& in, int channels, double sample_rate)
    : in_(in), channels_(channels), rate_(sample_rate) {
  if (channels < 1) throw AudioError("raw PCM channel count must be >= 1");
}

std::size_t RawPcmReader::read(std::span<double> out) {
  const std::size_t frame_bytes = 4 * static_cast<std::size_t>(channels_);
  bytes_.resize(out.size() * frame_bytes);
  in_.read(reinterpret_cast<char*>(bytes_.data()),
           static_cast<std::streamsize>(bytes_.size()));
  if (in_.bad()) throw AudioError("raw PCM read failed");
  const auto got = static_cast<std::size_t>(in_.gcount());
  const std::size_t frames = got / frame_bytes;

  std::vector<double> interleaved(frames * static_cast<std::size_t>(channels_));
  for (std::size_t i = 0; i < interleaved.size(); ++i) {
    std::uint32_t bits = 0;
    for (int b = 3; b >= 0; --b) bits = (bits << 8) | bytes_[i * 4 + static_cast<std::size_t>(b)];
    interleaved[i] = static_cast<double>(std::bit_cast<float>(bits));
  }
  mix_down(interleaved, channels_, out.first(frames));
  return frames;
}

LinearResampler::LinearResampler(std::unique_ptr<SampleReader> inner,
                                 double target_rate)
    : inner_(std::move(inner)),
      target_rate_(target_rate),
      step_(inner_->sample_rate() / target_rate) {}

std::optional<std::uint64_t> LinearResampler::total_samples() const {
  const auto in = inner_->total_samples();
  if (!in) return std::nullopt;
  if (*in == 0) return 0;
  return static_cast<std::uint64_t>(
             std::floor(static_cast<double>(*in - 1) / step_)) + 1;
}

// Makes input sample `index` resident if the stream has it.
bool LinearResampler::ensure(std::uint64_t index) {
  while (index >= buf_start_ + buf_.size()) {
    if (inner_done_) return false;
    // Drop everything before the sample preceding `index`.
    const std::uint64_t keep_from = index > 0 ? index - 1 : 0;
    if (keep_from > buf_start_) {
      const auto drop = std::min<std::uint64_t>(keep_from - buf_start_, buf_.size());
      buf_.erase(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(drop));
      buf_start_ += drop;
    }
    const std::size_t old = buf_.size();
    buf_.resize(old + 4096);
    const std::size_t got = inner_->read(std::span(buf_).subspan(old));
    buf_.resize(old + got);
    if (got == 0) inner_done_ = true;
  }
  return true;
}

std::size_t LinearResampler::read(std::span<double> out) {
  std::size_t n = 0;
  for (; n < out.size(); ++n) {
    const double t = static_cast<double>(out_pos_) * step_;
    const auto i0 = static_cast<std::uint64_t>(std::floor(t));
    const double frac = t - static_cast<double>(i0);
    if (!ensure(i0)) break;
    const double a = buf_[i0 - buf_start_];
    double value = a;
    if (frac > 0.0) {
      if (!ensure(i0 + 1)) break;
      const double b = buf_[i0 + 1 - buf_start_];
      value = a + (b - a) * frac;
    }
    out[n] = value;
    ++out_pos_;
  }
  return n;
}

}  // namespace synviz::audio
