#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "synviz/palette/color.hpp"

namespace synviz::palette {

/// One base color per frequency bin, low to high.
using Palette = std::array<Rgb, 12>;

/// Hex binding of a color name from data/named_colors.conf.
Rgb named_color(std::string_view name);

/// The twelve pitch-class names in table order (F C G D A E B F# Db Ab Eb Bb).
std::vector<std::string> pitch_classes();

/// Scriabin note color. Throws LookupError for names outside the table;
/// spelling must match exactly (no enharmonic aliases).
std::string scriabin_color_name(std::string_view pitch_class);
Rgb scriabin_color(std::string_view pitch_class);

std::vector<std::string> emotions();
std::string emotion_color_name(std::string_view emotion);
Rgb emotion_color(std::string_view emotion);

std::vector<std::string> keys();
/// Emotion associated with a musical key, e.g. "D Major" -> "Triumphant".
std::string key_emotion(std::string_view key);

/// Built-in default gradient: dark oceanic hues in bin 0 rising to bright
/// pink, yellow and silver-white in bin 11, luma nondecreasing.
Palette default_bin_palette();

/// Pitch class nearest a frequency, by rounding 69 + 12 log2(f / 440).
std::string nearest_pitch_class(double hz);

}  // namespace synviz::palette
