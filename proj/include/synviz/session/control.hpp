#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "synviz/analysis/analysis_config.hpp"
#include "synviz/palette/preset.hpp"

namespace synviz::session {

using ParamValue = std::variant<double, std::string>;

struct SetParam {
  std::string name;
  ParamValue value;
};
struct LoadSong {
  std::string path;
};
struct Play {};
struct Pause {};
struct ResetSim {};
struct SetPreset {
  std::string name;
};

using ControlMessage = std::variant<SetParam, LoadSong, Play, Pause, ResetSim, SetPreset>;

/// Parameters a running engine accepts, besides bin-color-0 .. bin-color-11.
inline constexpr const char* kTunableParams[] = {
    "num-points-to-average", "num-points-to-average-vol", "trigger-val", "max-average",
    "max-trigger",           "color-sensitivity",         "range_max",
};

/// Parses one JSON control message, e.g.
///   {"type": "set_param", "name": "trigger-val", "value": 50}
///   {"type": "load_song", "path": "song.wav"}
///   {"type": "play"} {"type": "pause"} {"type": "reset_sim"}
///   {"type": "set_preset", "name": "oceanic"}
/// Throws ParseError for malformed text or an unknown type.
ControlMessage parse_control(std::string_view json_text);
std::string to_json(const ControlMessage& msg);

/// Everything a control message can retune.
struct ConfigBundle {
  analysis::AnalysisConfig analysis;
  palette::Preset look;

  bool operator==(const ConfigBundle&) const = default;
};

/// Pure transition for set_param. Throws LookupError for an unknown name and
/// RangeError for an invalid value; the input bundle is never modified.
ConfigBundle apply_param(const ConfigBundle& bundle, const SetParam& msg);

/// Current value of a tunable parameter as it would appear in an ack.
ParamValue param_value(const ConfigBundle& bundle, const std::string& name);

/// Replaces the 12 base colors and color sensitivity with a preset's.
ConfigBundle apply_preset(const ConfigBundle& bundle, const palette::Preset& preset);

/// {"type":"ack","name":...,"value":...}
std::string ack_param(const std::string& name, const ParamValue& value);
/// {"type":"ack","command":...} plus preset details for set_preset.
std::string ack_command(const std::string& command, const ConfigBundle* bundle = nullptr);
/// {"type":"error","code":...,"message":...}
std::string error_reply(const std::string& code, const std::string& message);

}  // namespace synviz::session
