#include "synviz/cli/engine_config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "synviz/error.hpp"
#include "synviz/keyvalue.hpp"

namespace synviz::cli {

namespace {

constexpr std::string_view kBinColor = "bin-color-";

std::uint64_t parse_uint(const std::string& key, const std::string& text, std::size_t line,
                         std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, key + ": expected a non-negative integer, got '" + text + "'");
  }
  std::uint64_t v = 0;
  try {
    v = std::stoull(text);
  } catch (const std::out_of_range&) {
    throw RangeError(key, "too large");
  }
  if (v > max) throw RangeError(key, "must be <= " + std::to_string(max));
  return v;
}

std::size_t window_length(const std::string& key, const std::string& text, std::size_t line) {
  // Accept "4" and "4.0"; reject fractions and negatives with a range error.
  const double d = parse_number(text, line);
  if (d != std::floor(d) || d < 1.0 || d > static_cast<double>(analysis::kMaxWindowLength)) {
    throw RangeError(key, "must be an integer in [1, 1024]");
  }
  return static_cast<std::size_t>(d);
}

bool parse_bool(const std::string& key, const std::string& text, std::size_t line) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ParseError(line, key + ": expected true or false, got '" + text + "'");
}

}  // namespace

void EngineConfig::validate() const {
  analysis.validate();
  sim.validate();
  if (color_sensitivity && !(*color_sensitivity > 0.0)) throw RangeError("color-sensitivity", "must be > 0");
  if (stdin_channels && (*stdin_channels < 1 || *stdin_channels > 64)) {
    throw RangeError("stdin-pcm", "channel count must be in [1, 64]");
  }
}

double EngineConfig::effective_color_sensitivity() const { return color_sensitivity.value_or(2.0); }

void set_config_value(EngineConfig& cfg, const std::string& key, const std::string& value, std::size_t line) {
  auto num = [&] { return parse_number(value, line); };
  auto& a = cfg.analysis;
  auto& s = cfg.sim;

  if (key == "num-points-to-average") {
    a.n_avg = window_length(key, value, line);
  } else if (key == "num-points-to-average-vol") {
    a.n_vol = window_length(key, value, line);
  } else if (key == "trigger-val") {
    a.trigger_val = num();
  } else if (key == "max-average") {
    a.max_average = num();
  } else if (key == "max-trigger") {
    a.max_trigger = num();
  } else if (key == "range_max") {
    a.range_max = num();
  } else if (key == "min-db") {
    a.min_db = num();
  } else if (key == "max-db") {
    a.max_db = num();
  } else if (key == "window") {
    a.window = analysis::parse_window(value);
  } else if (key == "color-sensitivity") {
    cfg.color_sensitivity = num();
  } else if (key.starts_with(kBinColor)) {
    const std::string idx = key.substr(kBinColor.size());
    const auto i = parse_uint(key, idx, line, 11);
    try {
      cfg.bin_colors[i] = palette::parse_hex(value);
    } catch (const ParseError& e) {
      throw ParseError(line, key + ": " + e.what());
    }
  } else if (key == "preset") {
    cfg.preset = value;
  } else if (key == "particles") {
    s.n_particles = parse_uint(key, value, line);
  } else if (key == "seed") {
    s.seed = parse_uint(key, value, line);
  } else if (key == "dt") {
    s.dt = num();
  } else if (key == "drag") {
    s.drag = num();
  } else if (key == "base-force") {
    s.base_force = num();
  } else if (key == "target-walk-scale") {
    s.target_walk_scale = num();
  } else if (key == "input") {
    cfg.input = value;
  } else if (key == "stdin-pcm") {
    cfg.stdin_channels = static_cast<int>(parse_uint(key, value, line, 64));
  } else if (key == "resample") {
    cfg.resample = parse_bool(key, value, line);
  } else if (key == "mode") {
    if (value == "headless") {
      cfg.mode = Mode::headless;
    } else if (value == "serve") {
      cfg.mode = Mode::serve;
    } else {
      throw ParseError(line, "mode: expected headless or serve, got '" + value + "'");
    }
  } else if (key == "port") {
    cfg.port = static_cast<std::uint16_t>(parse_uint(key, value, line, 65535));
  } else if (key == "frames-out") {
    cfg.frames_out = value;
  } else if (key == "csv-out") {
    cfg.csv_out = value;
  } else {
    throw ParseError(line, "unknown key '" + key + "'");
  }
}

EngineConfig parse_config(std::string_view text) {
  EngineConfig cfg;
  for (const auto& kv : parse_key_values(text)) set_config_value(cfg, kv.key, kv.value, kv.line);
  cfg.validate();
  return cfg;
}

void merge_config_file(EngineConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  for (const auto& kv : parse_key_values(ss.str())) set_config_value(cfg, kv.key, kv.value, kv.line);
  cfg.validate();
}

EngineConfig load_config(const std::filesystem::path& path) {
  EngineConfig cfg;
  merge_config_file(cfg, path);
  return cfg;
}

std::string format_config(const EngineConfig& cfg) {
  std::ostringstream out;
  const auto& a = cfg.analysis;
  const auto& s = cfg.sim;
  out << "num-points-to-average = " << a.n_avg << '\n'
      << "num-points-to-average-vol = " << a.n_vol << '\n'
      << "trigger-val = " << format_number(a.trigger_val) << '\n'
      << "max-average = " << format_number(a.max_average) << '\n'
      << "max-trigger = " << format_number(a.max_trigger) << '\n'
      << "range_max = " << format_number(a.range_max) << '\n'
      << "min-db = " << format_number(a.min_db) << '\n'
      << "max-db = " << format_number(a.max_db) << '\n'
      << "window = " << analysis::to_string(a.window) << '\n'
      << "preset = " << cfg.preset << '\n';
  if (cfg.color_sensitivity) out << "color-sensitivity = " << format_number(*cfg.color_sensitivity) << '\n';
  for (std::size_t i = 0; i < cfg.bin_colors.size(); ++i) {
    if (cfg.bin_colors[i]) out << kBinColor << i << " = " << palette::to_hex(*cfg.bin_colors[i]) << '\n';
  }
  out << "particles = " << s.n_particles << '\n'
      << "seed = " << s.seed << '\n'
      << "dt = " << format_number(s.dt) << '\n'
      << "drag = " << format_number(s.drag) << '\n'
      << "base-force = " << format_number(s.base_force) << '\n'
      << "target-walk-scale = " << format_number(s.target_walk_scale) << '\n';
  if (!cfg.input.empty()) out << "input = " << cfg.input << '\n';
  if (cfg.stdin_channels) out << "stdin-pcm = " << *cfg.stdin_channels << '\n';
  out << "resample = " << (cfg.resample ? "true" : "false") << '\n'
      << "mode = " << (cfg.mode == Mode::serve ? "serve" : "headless") << '\n'
      << "port = " << cfg.port << '\n';
  if (!cfg.frames_out.empty()) out << "frames-out = " << cfg.frames_out << '\n';
  if (!cfg.csv_out.empty()) out << "csv-out = " << cfg.csv_out << '\n';
  return out.str();
}

std::string defaults_dump() {
  const EngineConfig d;
  std::ostringstream out;
  out << "num-points-to-average = " << d.analysis.n_avg << '\n'
      << "num-points-to-average-vol = " << d.analysis.n_vol << '\n'
      << "trigger-val = " << format_number(d.analysis.trigger_val) << '\n'
      << "max-average = " << format_number(d.analysis.max_average) << '\n'
      << "max-trigger = " << format_number(d.analysis.max_trigger) << '\n'
      << "color-sensitivity = " << format_number(d.effective_color_sensitivity()) << '\n'
      << "range_max = " << format_number(d.analysis.range_max) << '\n';
  return out.str();
}

palette::Preset resolve_look(const EngineConfig& cfg) {
  palette::Preset look = palette::resolve_preset(cfg.preset);
  if (cfg.color_sensitivity) look.color_sensitivity = *cfg.color_sensitivity;
  for (std::size_t i = 0; i < cfg.bin_colors.size(); ++i) {
    if (cfg.bin_colors[i]) look.base[i] = *cfg.bin_colors[i];
  }
  look.validate();
  return look;
}

session::ConfigBundle make_bundle(const EngineConfig& cfg) { return {cfg.analysis, resolve_look(cfg)}; }

}  // namespace synviz::cli
