#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <set>

#include "oracles.hpp"
#include "synviz/analysis/bins.hpp"
#include "synviz/error.hpp"
#include "synviz/palette/color.hpp"
#include "synviz/palette/preset.hpp"
#include "synviz/palette/tables.hpp"

namespace synviz::palette {
namespace {

TEST(Color, HexRoundTrip) {
  const Rgb c = parse_hex("#8B0000");
  EXPECT_DOUBLE_EQ(c.r, 139.0 / 255.0);
  EXPECT_EQ(c.g, 0.0);
  EXPECT_EQ(to_hex(c), "#8b0000");
  for (int v = 0; v < 256; v += 5) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", v, 255 - v, v / 2);
    EXPECT_EQ(to_hex(parse_hex(buf)), buf);
  }
  EXPECT_THROW(parse_hex("8b0000"), ParseError);
  EXPECT_THROW(parse_hex("#8b00"), ParseError);
  EXPECT_THROW(parse_hex("#8b00zz"), ParseError);
}

TEST(Color, LumaAndHue) {
  EXPECT_DOUBLE_EQ(luma({1, 1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(luma({0, 1, 0}), 0.7152);
  EXPECT_DOUBLE_EQ(hue_degrees({1, 0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(hue_degrees({0, 1, 0}), 120.0);
  EXPECT_DOUBLE_EQ(hue_degrees({0, 0, 1}), 240.0);
  EXPECT_DOUBLE_EQ(hue_degrees({0.5, 0.5, 0.5}), 0.0);
}

TEST(Scriabin, QuotedMappings) {
  EXPECT_EQ(scriabin_color_name("D"), "Yellow");
  EXPECT_EQ(scriabin_color_name("F"), "Dark Red");
  EXPECT_EQ(scriabin_color_name("E"), "Light Blue");
  EXPECT_EQ(scriabin_color_name("Bb"), "Rosy Brown");
  EXPECT_EQ(scriabin_color("D"), named_color("Yellow"));
  EXPECT_EQ(to_hex(scriabin_color("F")), "#8b0000");
}

TEST(Scriabin, TableIsTotalAndOneToOne) {
  const auto classes = pitch_classes();
  ASSERT_EQ(classes.size(), 12u);
  std::set<std::string> colors;
  for (const auto& pc : classes) colors.insert(scriabin_color_name(pc));
  EXPECT_EQ(colors.size(), 12u);
  EXPECT_THROW(scriabin_color("H"), LookupError);
  EXPECT_THROW(scriabin_color("C#"), LookupError);
}

TEST(Emotion, QuotedMappings) {
  EXPECT_EQ(emotion_color_name("Happiness"), "Yellow");
  EXPECT_EQ(emotion_color_name("Sadness"), "Dark Blue");
  EXPECT_EQ(emotion_color_name("Calmness"), "Light Blue");
  EXPECT_EQ(emotion_color_name("Anger"), "Red");
  EXPECT_EQ(key_emotion("D Major"), "Triumphant");
  EXPECT_EQ(key_emotion("C Major"), "Innocently Happy");
  EXPECT_EQ(key_emotion("A Major"), "Joyful");
  EXPECT_EQ(emotions().size(), 8u);
  EXPECT_EQ(keys().size(), 8u);
  EXPECT_THROW(emotion_color("Boredom"), LookupError);
  EXPECT_THROW(key_emotion("E Major"), LookupError);
  EXPECT_THROW(named_color("Chartreuse"), LookupError);
}

TEST(Emotion, EveryEmotionResolvesToAColor) {
  for (const auto& e : emotions()) EXPECT_NO_THROW(emotion_color(e)) << e;
  for (const auto& k : keys()) EXPECT_FALSE(key_emotion(k).empty()) << k;
}

TEST(DefaultPalette, DarkToBright) {
  const auto p = default_bin_palette();
  EXPECT_LT(luma(p[0]), luma(p[11]));
  for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_LE(luma(p[i]), luma(p[i + 1])) << i;

  const double h0 = hue_degrees(p[0]);
  EXPECT_GE(h0, 90.0);   // green
  EXPECT_LE(h0, 300.0);  // through blue to purple
  EXPECT_GE(p[11].r, 0.7);
  EXPECT_GE(p[11].g, 0.7);
  EXPECT_GE(p[11].b, 0.7);
  for (const auto& c : p) {
    for (double ch : {c.r, c.g, c.b}) {
      EXPECT_GE(ch, 0.0);
      EXPECT_LE(ch, 1.0);
    }
  }
}

TEST(NearestPitchClass, KnownFrequencies) {
  EXPECT_EQ(nearest_pitch_class(440.0), "A");
  EXPECT_EQ(nearest_pitch_class(261.63), "C");
  EXPECT_EQ(nearest_pitch_class(277.18), "Db");
  EXPECT_EQ(nearest_pitch_class(369.99), "F#");
  EXPECT_EQ(nearest_pitch_class(466.16), "Bb");
}

// Re-derive the scriabin preset: each bin takes the note nearest the
// midpoint frequency of its index range.
TEST(Presets, ScriabinMatchesBinCenters) {
  const char* names[] = {"C", "Db", "D", "Eb", "E", "F", "F#", "G", "Ab", "A", "Bb", "B"};
  const auto preset = builtin_preset("scriabin");
  for (std::size_t g = 0; g < 12; ++g) {
    const auto& r = analysis::kBinPartition[g];
    const double hz = (static_cast<double>(r.first) + static_cast<double>(r.last)) / 2.0 * 44100.0 / 1024.0;
    const long midi = std::lround(69.0 + 12.0 * std::log2(hz / 440.0));
    const std::string note = names[((midi % 12) + 12) % 12];
    EXPECT_EQ(preset.base[g], scriabin_color(note)) << "bin " << g << " " << hz << " Hz -> " << note;
  }
}

TEST(Presets, BuiltinsLoadAndValidate) {
  const auto names = builtin_preset_names();
  EXPECT_EQ(names, (std::vector<std::string>{"default", "oceanic", "scriabin"}));
  for (const auto& n : names) {
    const auto p = builtin_preset(n);
    EXPECT_EQ(p.name, n);
    EXPECT_NO_THROW(p.validate());
    EXPECT_GT(p.color_sensitivity, 0.0);
  }
  EXPECT_EQ(builtin_preset("default").base, default_bin_palette());
  EXPECT_EQ(builtin_preset("oceanic").emotion, "Calmness");
  EXPECT_THROW(builtin_preset("vaporwave"), LookupError);
}

TEST(Presets, SerializeRoundTrip) {
  for (const auto& n : builtin_preset_names()) {
    const auto p = builtin_preset(n);
    EXPECT_EQ(parse_preset(format_preset(p)), p) << n;
  }
  Preset custom;
  custom.name = "custom";
  custom.color_sensitivity = 0.75;
  custom.emotion = "Fear";
  for (std::size_t i = 0; i < 12; ++i) custom.base[i] = parse_hex(i % 2 ? "#102030" : "#f0e0d0");
  EXPECT_EQ(parse_preset(format_preset(custom)), custom);

  synviz::testing::TempDir dir;
  std::ofstream(dir / "c.preset") << format_preset(custom);
  EXPECT_EQ(load_preset_file(dir / "c.preset"), custom);
  EXPECT_EQ(resolve_preset((dir / "c.preset").string()), custom);
}

TEST(Presets, ParseErrors) {
  EXPECT_THROW(parse_preset("name = x\ncolor-sensitivity = 2\nbin-color-0 = #000000\n"), ParseError);
  auto text = format_preset(builtin_preset("default"));
  EXPECT_THROW(parse_preset(text + "bin-color-3 = nothex\n"), ParseError);
  EXPECT_THROW(parse_preset(text + "color-sensitivity = 0\n"), RangeError);
  EXPECT_THROW(parse_preset(text + "what = 1\n"), ParseError);
}

}  // namespace
}  // namespace synviz::palette
