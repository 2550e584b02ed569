#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "synviz/analysis/analyzer.hpp"
#include "synviz/audio/audio_source.hpp"
#include "synviz/engine/particle_engine.hpp"
#include "synviz/session/control.hpp"
#include "synviz/session/frame_packet.hpp"

namespace synviz::session {

struct PipelineOptions {
  engine::SimConfig sim;
  audio::SourceOptions source;
  /// Also emit a frame for a zero-padded trailing partial hop.
  bool include_partial_tail = false;
};

/// Source -> analysis -> particle engine -> packet, one hop per tick().
/// Control messages are applied between ticks, so every frame is computed
/// under exactly one configuration. Not thread-safe; one worker drives it.
class Pipeline {
 public:
  Pipeline(const ConfigBundle& bundle, const PipelineOptions& options);

  /// Replaces the current song and clears the analysis windows. Does not
  /// change play/pause state.
  void load(std::unique_ptr<audio::AudioSource> source);

  /// Applies one control message and returns the JSON reply (ack or error).
  std::string apply(const ControlMessage& msg);

  /// Produces the next frame, or nullopt when paused, unloaded or finished.
  std::optional<FramePacket> tick();

  void set_playing(bool playing) { playing_ = playing; }
  bool playing() const { return playing_; }
  bool finished() const { return !source_ || source_done_; }

  const ConfigBundle& bundle() const { return bundle_; }
  const analysis::AnalysisFrame& last_frame() const { return last_frame_; }
  const engine::ParticleEngine& engine() const { return engine_; }
  std::uint64_t next_frame_index() const { return frame_index_; }

 private:
  ConfigBundle bundle_;
  PipelineOptions options_;
  analysis::Analyzer analyzer_;
  engine::ParticleEngine engine_;
  std::unique_ptr<audio::AudioSource> source_;
  bool source_done_ = false;
  bool playing_ = false;
  std::uint64_t frame_index_ = 0;
  analysis::AnalysisFrame last_frame_;
};

}  // namespace synviz::session
