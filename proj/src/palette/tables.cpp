#include "synviz/palette/tables.hpp"

#include <cmath>
#include <map>

#include "synviz/embedded_data.hpp"
#include "synviz/error.hpp"
#include "synviz/keyvalue.hpp"
#include "synviz/palette/preset.hpp"

namespace synviz::palette {

namespace {

struct Table {
  std::vector<std::string> order;
  std::map<std::string, std::string, std::less<>> values;
};

Table load_table(std::string_view file) {
  const auto text = embedded_file(file);
  if (!text) throw Error("missing embedded data file " + std::string(file));
  Table t;
  for (auto& kv : parse_key_values(*text)) {
    t.order.push_back(kv.key);
    t.values.emplace(std::move(kv.key), std::move(kv.value));
  }
  return t;
}

const Table& colors() {
  static const Table t = load_table("named_colors.conf");
  return t;
}
const Table& notes() {
  static const Table t = load_table("note_colors.conf");
  return t;
}
const Table& emotion_table() {
  static const Table t = load_table("emotion_colors.conf");
  return t;
}
const Table& key_table() {
  static const Table t = load_table("key_emotions.conf");
  return t;
}

const std::string& lookup(const Table& t, std::string_view name, const char* what) {
  const auto it = t.values.find(name);
  if (it == t.values.end()) throw LookupError(std::string("unknown ") + what + ": '" + std::string(name) + "'");
  return it->second;
}

}  // namespace

Rgb named_color(std::string_view name) { return parse_hex(lookup(colors(), name, "color name")); }

std::vector<std::string> pitch_classes() { return notes().order; }

std::string scriabin_color_name(std::string_view pitch_class) {
  return lookup(notes(), pitch_class, "pitch class");
}

Rgb scriabin_color(std::string_view pitch_class) {
  return named_color(scriabin_color_name(pitch_class));
}

std::vector<std::string> emotions() { return emotion_table().order; }

std::string emotion_color_name(std::string_view emotion) {
  return lookup(emotion_table(), emotion, "emotion");
}

Rgb emotion_color(std::string_view emotion) { return named_color(emotion_color_name(emotion)); }

std::vector<std::string> keys() { return key_table().order; }

std::string key_emotion(std::string_view key) { return lookup(key_table(), key, "key"); }

Palette default_bin_palette() { return builtin_preset("default").base; }

std::string nearest_pitch_class(double hz) {
  static constexpr const char* kChromatic[12] = {"C",  "Db", "D",  "Eb", "E",  "F",
                                                 "F#", "G",  "Ab", "A",  "Bb", "B"};
  const long midi = std::lround(69.0 + 12.0 * std::log2(hz / 440.0));
  return kChromatic[((midi % 12) + 12) % 12];
}

}  // namespace synviz::palette
