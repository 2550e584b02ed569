#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synviz/palette/tables.hpp"

namespace synviz::palette {

struct Preset {
  std::string name;
  Palette base{};
  double color_sensitivity = 2.0;
  std::optional<std::string> emotion;

  /// All 12 colors in [0, 1] and color_sensitivity > 0; throws RangeError.
  void validate() const;

  bool operator==(const Preset&) const = default;
};

/// Parses a preset file: name, color-sensitivity, optional emotion and
/// bin-color-0 .. bin-color-11. All twelve colors are required.
Preset parse_preset(std::string_view text);
std::string format_preset(const Preset& preset);
Preset load_preset_file(const std::filesystem::path& path);

std::vector<std::string> builtin_preset_names();
/// One of "default", "oceanic", "scriabin". Throws LookupError.
Preset builtin_preset(std::string_view name);

/// A built-in preset name, or else a path to a preset file.
Preset resolve_preset(const std::string& name_or_path);

}  // namespace synviz::palette
