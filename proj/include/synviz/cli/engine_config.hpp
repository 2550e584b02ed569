#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "synviz/analysis/analysis_config.hpp"
#include "synviz/engine/particles.hpp"
#include "synviz/palette/preset.hpp"
#include "synviz/session/control.hpp"

namespace synviz::cli {

enum class Mode { headless, serve };

/// Everything needed to start the engine. Defaults reproduce the stock
/// tuning: num-points-to-average 4, num-points-to-average-vol 8,
/// trigger-val 70, max-average 0.3, max-trigger 0.15, color-sensitivity 2,
/// range_max 0.3.
struct EngineConfig {
  analysis::AnalysisConfig analysis;
  engine::SimConfig sim;
  std::string preset = "default";
  /// Overrides the preset's color sensitivity when set.
  std::optional<double> color_sensitivity;
  std::array<std::optional<palette::Rgb>, 12> bin_colors{};

  std::string input;
  std::optional<int> stdin_channels;
  bool resample = false;
  Mode mode = Mode::headless;
  std::uint16_t port = 7878;
  std::string frames_out;
  std::string csv_out;

  /// Throws RangeError naming the offending key.
  void validate() const;
  /// Effective color sensitivity (override or the stock 2).
  double effective_color_sensitivity() const;

  bool operator==(const EngineConfig&) const = default;
};

/// Sets one key from text. Keys match the flag and control names.
/// Throws ParseError (with `line`) or RangeError (naming the key).
void set_config_value(EngineConfig& cfg, const std::string& key, const std::string& value,
                      std::size_t line = 0);

/// `key = value` lines; `#` comment lines. Unspecified keys keep defaults,
/// unknown keys are errors.
EngineConfig parse_config(std::string_view text);
EngineConfig load_config(const std::filesystem::path& path);
/// Applies a config file on top of an existing config.
void merge_config_file(EngineConfig& cfg, const std::filesystem::path& path);

/// Every key with its value, in a form parse_config reads back to an equal config.
std::string format_config(const EngineConfig& cfg);

/// The seven stock tuning values, one `key = value` line each.
std::string defaults_dump();

/// The preset named by the config with color overrides applied.
palette::Preset resolve_look(const EngineConfig& cfg);

session::ConfigBundle make_bundle(const EngineConfig& cfg);

}  // namespace synviz::cli
