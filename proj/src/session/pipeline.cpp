#include "synviz/session/pipeline.hpp"

#include "synviz/error.hpp"

namespace synviz::session {

Pipeline::Pipeline(const ConfigBundle& bundle, const PipelineOptions& options)
    : bundle_(bundle), options_(options), analyzer_(bundle.analysis), engine_(options.sim, bundle.look.base) {}

void Pipeline::load(std::unique_ptr<audio::AudioSource> source) {
  source_ = std::move(source);
  source_done_ = false;
  analyzer_.reset();
}

std::string Pipeline::apply(const ControlMessage& msg) {
  try {
    if (const auto* m = std::get_if<SetParam>(&msg)) {
      bundle_ = apply_param(bundle_, *m);
      analyzer_.set_config(bundle_.analysis);
      return ack_param(m->name, param_value(bundle_, m->name));
    }
    if (const auto* m = std::get_if<SetPreset>(&msg)) {
      bundle_ = apply_preset(bundle_, palette::resolve_preset(m->name));
      return ack_command("set_preset", &bundle_);
    }
    if (const auto* m = std::get_if<LoadSong>(&msg)) {
      load(std::make_unique<audio::AudioSource>(audio::open_source(m->path, options_.source)));
      return ack_command("load_song");
    }
    if (std::holds_alternative<Play>(msg)) {
      playing_ = true;
      return ack_command("play");
    }
    if (std::holds_alternative<Pause>(msg)) {
      playing_ = false;
      return ack_command("pause");
    }
    engine_.reset(bundle_.look.base);
    return ack_command("reset_sim");
  } catch (const RangeError& e) {
    return error_reply("range", e.what());
  } catch (const LookupError& e) {
    return error_reply("unknown", e.what());
  } catch (const AudioError& e) {
    return error_reply("load_failed", e.what());
  } catch (const Error& e) {
    return error_reply("failed", e.what());
  }
}

std::optional<FramePacket> Pipeline::tick() {
  if (!playing_ || !source_ || source_done_) return std::nullopt;

  auto hop = source_->next_hop();
  if (!hop || (hop->padded() && !options_.include_partial_tail)) {
    source_done_ = true;
    return std::nullopt;
  }
  if (hop->last) source_done_ = true;

  last_frame_ = analyzer_.analyze(*hop);
  const auto& params = engine_.advance(last_frame_, bundle_.look, bundle_.analysis);
  return snapshot(engine_.state(), last_frame_, params, frame_index_++);
}

}  // namespace synviz::session
