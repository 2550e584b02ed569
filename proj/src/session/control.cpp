#include "synviz/session/control.hpp"

#include <cmath>
#include <json.hpp>

#include "synviz/error.hpp"

namespace synviz::session {

namespace {

using nlohmann::json;

constexpr std::string_view kBinColor = "bin-color-";

std::string require_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw ParseError(0, std::string("field '") + field + "' must be a string");
  }
  return j[field].get<std::string>();
}

std::optional<std::size_t> bin_color_index(const std::string& name) {
  if (!name.starts_with(kBinColor)) return std::nullopt;
  const std::string idx = name.substr(kBinColor.size());
  if (idx.empty() || idx.size() > 2 || idx.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  const std::size_t i = std::stoul(idx);
  if (i >= 12 || std::to_string(i) != idx) return std::nullopt;
  return i;
}

double number(const std::string& name, const ParamValue& v) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  throw RangeError(name, "expects a number");
}

std::size_t count(const std::string& name, const ParamValue& v) {
  const double d = number(name, v);
  if (d != std::floor(d) || d < 1.0 || d > static_cast<double>(analysis::kMaxWindowLength)) {
    throw RangeError(name, "must be an integer in [1, 1024]");
  }
  return static_cast<std::size_t>(d);
}

json to_json_value(const ParamValue& v) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  return std::get<std::string>(v);
}

}  // namespace

ControlMessage parse_control(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "control message must be a JSON object");
  const std::string type = require_string(j, "type");

  if (type == "set_param") {
    SetParam m{require_string(j, "name"), 0.0};
    if (!j.contains("value")) throw ParseError(0, "set_param needs a value");
    const json& v = j["value"];
    if (v.is_number()) {
      m.value = v.get<double>();
    } else if (v.is_string()) {
      m.value = v.get<std::string>();
    } else {
      throw ParseError(0, "value must be a number or a string");
    }
    return m;
  }
  if (type == "load_song") return LoadSong{require_string(j, "path")};
  if (type == "play") return Play{};
  if (type == "pause") return Pause{};
  if (type == "reset_sim") return ResetSim{};
  if (type == "set_preset") return SetPreset{require_string(j, "name")};
  throw ParseError(0, "unknown message type '" + type + "'");
}

std::string to_json(const ControlMessage& msg) {
  json j = std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SetParam>) {
          return {{"type", "set_param"}, {"name", m.name}, {"value", to_json_value(m.value)}};
        } else if constexpr (std::is_same_v<T, LoadSong>) {
          return {{"type", "load_song"}, {"path", m.path}};
        } else if constexpr (std::is_same_v<T, Play>) {
          return {{"type", "play"}};
        } else if constexpr (std::is_same_v<T, Pause>) {
          return {{"type", "pause"}};
        } else if constexpr (std::is_same_v<T, ResetSim>) {
          return {{"type", "reset_sim"}};
        } else {
          return {{"type", "set_preset"}, {"name", m.name}};
        }
      },
      msg);
  return j.dump();
}

ConfigBundle apply_param(const ConfigBundle& bundle, const SetParam& msg) {
  ConfigBundle next = bundle;
  const std::string& name = msg.name;
  auto& a = next.analysis;

  if (name == "num-points-to-average") {
    a.n_avg = count(name, msg.value);
  } else if (name == "num-points-to-average-vol") {
    a.n_vol = count(name, msg.value);
  } else if (name == "trigger-val") {
    a.trigger_val = number(name, msg.value);
  } else if (name == "max-average") {
    a.max_average = number(name, msg.value);
  } else if (name == "max-trigger") {
    a.max_trigger = number(name, msg.value);
  } else if (name == "range_max") {
    a.range_max = number(name, msg.value);
  } else if (name == "color-sensitivity") {
    next.look.color_sensitivity = number(name, msg.value);
  } else if (const auto bin = bin_color_index(name)) {
    const auto* hex = std::get_if<std::string>(&msg.value);
    if (!hex) throw RangeError(name, "expects a '#rrggbb' string");
    try {
      next.look.base[*bin] = palette::parse_hex(*hex);
    } catch (const ParseError& e) {
      throw RangeError(name, e.what());
    }
  } else {
    throw LookupError("unknown parameter '" + name + "'");
  }

  a.validate();
  next.look.validate();
  return next;
}

ParamValue param_value(const ConfigBundle& b, const std::string& name) {
  const auto& a = b.analysis;
  if (name == "num-points-to-average") return static_cast<double>(a.n_avg);
  if (name == "num-points-to-average-vol") return static_cast<double>(a.n_vol);
  if (name == "trigger-val") return a.trigger_val;
  if (name == "max-average") return a.max_average;
  if (name == "max-trigger") return a.max_trigger;
  if (name == "range_max") return a.range_max;
  if (name == "color-sensitivity") return b.look.color_sensitivity;
  if (const auto bin = bin_color_index(name)) return palette::to_hex(b.look.base[*bin]);
  throw LookupError("unknown parameter '" + name + "'");
}

ConfigBundle apply_preset(const ConfigBundle& bundle, const palette::Preset& preset) {
  preset.validate();
  ConfigBundle next = bundle;
  next.look = preset;
  return next;
}

std::string ack_param(const std::string& name, const ParamValue& value) {
  return json{{"type", "ack"}, {"name", name}, {"value", to_json_value(value)}}.dump();
}

std::string ack_command(const std::string& command, const ConfigBundle* bundle) {
  json j{{"type", "ack"}, {"command", command}};
  if (bundle) {
    json colors = json::array();
    for (const auto& c : bundle->look.base) colors.push_back(palette::to_hex(c));
    j["name"] = bundle->look.name;
    j["colors"] = colors;
    j["color-sensitivity"] = bundle->look.color_sensitivity;
  }
  return j.dump();
}

std::string error_reply(const std::string& code, const std::string& message) {
  return json{{"type", "error"}, {"code", code}, {"message", message}}.dump();
}

}  // namespace synviz::session
