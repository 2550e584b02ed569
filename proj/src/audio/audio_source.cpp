#include "synviz/audio/audio_source.hpp"

#include <algorithm>
#include <cmath>

#include "synviz/audio/wav.hpp"
#include "synviz/error.hpp"

namespace synviz::audio {

AudioSource::AudioSource(std::unique_ptr<SampleReader> reader, std::string origin,
                         const SourceOptions& options)
    : reader_(std::move(reader)), origin_(std::move(origin)), channels_(reader_->channels()) {
  if (reader_->sample_rate() != kSampleRate) {
    if (!options.allow_resample) {
      throw AudioError("unsupported sample rate " +
                       std::to_string(static_cast<long>(reader_->sample_rate())) +
                       " Hz in " + origin_ + " (expected 44100; enable resampling to convert)");
    }
    reader_ = std::make_unique<LinearResampler>(std::move(reader_), kSampleRate);
  }
}

std::optional<std::uint64_t> AudioSource::total_hops() const {
  const auto total = reader_->total_samples();
  if (!total) return std::nullopt;
  return *total / kHopSize;
}

std::optional<SampleHop> AudioSource::next_hop() {
  if (done_) return std::nullopt;

  SampleHop hop;
  std::size_t filled = 0;
  while (filled < kHopSize) {
    const std::size_t got = reader_->read(std::span(hop.samples).subspan(filled));
    if (got == 0) break;
    filled += got;
  }
  if (filled == 0) {
    done_ = true;
    return std::nullopt;
  }
  samples_read_ += filled;

  hop.index = next_index_++;
  hop.valid = filled;
  const auto total = reader_->total_samples();
  hop.last = filled < kHopSize || (total && samples_read_ >= *total);
  if (hop.last) done_ = true;
  return hop;
}

AudioSource open_source(const std::filesystem::path& path, const SourceOptions& options) {
  if (!std::filesystem::exists(path)) {
    throw AudioError("input file not found: " + path.string());
  }
  return AudioSource(std::make_unique<WavReader>(path), path.string(), options);
}

AudioSource open_raw_stream(std::istream& in, int channels, const SourceOptions& options) {
  return AudioSource(std::make_unique<RawPcmReader>(in, channels, kSampleRate),
                     "raw-pcm:" + std::to_string(channels) + "ch", options);
}

}  // namespace synviz::audio
