#include "synviz/palette/preset.hpp"

#include <fstream>
#include <sstream>

#include "synviz/embedded_data.hpp"
#include "synviz/error.hpp"
#include "synviz/keyvalue.hpp"

namespace synviz::palette {

namespace {

constexpr std::string_view kBinColorPrefix = "bin-color-";

}  // namespace

void Preset::validate() const {
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (double ch : {base[i].r, base[i].g, base[i].b}) {
      if (!(ch >= 0.0 && ch <= 1.0)) {
        throw RangeError(std::string(kBinColorPrefix) + std::to_string(i), "channel outside [0, 1]");
      }
    }
  }
  if (!(color_sensitivity > 0.0)) throw RangeError("color-sensitivity", "must be > 0");
}

Preset parse_preset(std::string_view text) {
  Preset p;
  std::array<bool, 12> seen{};
  bool have_name = false;
  for (const auto& kv : parse_key_values(text)) {
    if (kv.key == "name") {
      p.name = kv.value;
      have_name = true;
    } else if (kv.key == "emotion") {
      p.emotion = kv.value;
    } else if (kv.key == "color-sensitivity") {
      p.color_sensitivity = parse_number(kv.value, kv.line);
    } else if (kv.key.starts_with(kBinColorPrefix)) {
      const std::string idx = kv.key.substr(kBinColorPrefix.size());
      std::size_t i = 0;
      try {
        std::size_t used = 0;
        i = std::stoul(idx, &used);
        if (used != idx.size()) throw std::invalid_argument(idx);
      } catch (const std::exception&) {
        throw ParseError(kv.line, "bad bin index in '" + kv.key + "'");
      }
      if (i >= p.base.size()) throw ParseError(kv.line, "bin index out of range in '" + kv.key + "'");
      try {
        p.base[i] = parse_hex(kv.value);
      } catch (const ParseError& e) {
        throw ParseError(kv.line, e.what());
      }
      seen[i] = true;
    } else {
      throw ParseError(kv.line, "unknown preset key '" + kv.key + "'");
    }
  }
  if (!have_name) throw ParseError(0, "preset has no name");
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ParseError(0, "preset '" + p.name + "' is missing bin-color-" + std::to_string(i));
  }
  p.validate();
  return p;
}

std::string format_preset(const Preset& preset) {
  std::ostringstream out;
  out << "name = " << preset.name << '\n';
  if (preset.emotion) out << "emotion = " << *preset.emotion << '\n';
  out << "color-sensitivity = " << format_number(preset.color_sensitivity) << '\n';
  for (std::size_t i = 0; i < preset.base.size(); ++i) {
    out << kBinColorPrefix << i << " = " << to_hex(preset.base[i]) << '\n';
  }
  return out.str();
}

Preset load_preset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open preset file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_preset(ss.str());
}

std::vector<std::string> builtin_preset_names() { return {"default", "oceanic", "scriabin"}; }

Preset builtin_preset(std::string_view name) {
  const auto text = embedded_file("presets/" + std::string(name) + ".preset");
  if (!text) throw LookupError("unknown preset: '" + std::string(name) + "'");
  return parse_preset(*text);
}

Preset resolve_preset(const std::string& name_or_path) {
  for (const auto& n : builtin_preset_names()) {
    if (n == name_or_path) return builtin_preset(n);
  }
  if (std::filesystem::exists(name_or_path)) return load_preset_file(name_or_path);
  throw LookupError("unknown preset: '" + name_or_path + "' (not built in and no such file)");
}

}  // namespace synviz::palette
