#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>

#include "synviz/audio/sample_hop.hpp"
#include "synviz/audio/sample_reader.hpp"

namespace synviz::audio {

struct SourceOptions {
  /// Convert non-44100 Hz input with a linear resampler instead of rejecting it.
  bool allow_resample = false;
};

/// Cuts a sample stream into consecutive, non-overlapping 1024-sample hops.
class AudioSource {
 public:
  AudioSource(std::unique_ptr<SampleReader> reader, std::string origin,
              const SourceOptions& options = {});

  /// Next hop, or nullopt at end of stream. A trailing partial hop is
  /// zero-padded and flagged `last`.
  std::optional<SampleHop> next_hop();

  const std::string& origin() const { return origin_; }
  int channels() const { return channels_; }
  double sample_rate() const { return reader_->sample_rate(); }
  /// Number of full hops, floor(samples / 1024), when the length is known.
  std::optional<std::uint64_t> total_hops() const;
  std::uint64_t hops_emitted() const { return next_index_; }

 private:
  std::unique_ptr<SampleReader> reader_;
  std::string origin_;
  int channels_;
  std::uint64_t next_index_ = 0;
  std::uint64_t samples_read_ = 0;
  bool done_ = false;
};

/// Opens a WAV file positioned at hop 0.
AudioSource open_source(const std::filesystem::path& path,
                        const SourceOptions& options = {});

/// Raw interleaved f32 LE PCM at 44100 Hz from a stream such as stdin.
AudioSource open_raw_stream(std::istream& in, int channels,
                            const SourceOptions& options = {});

}  // namespace synviz::audio
