#include "synviz/palette/color.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "synviz/error.hpp"

namespace synviz::palette {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Rgb parse_hex(std::string_view hex) {
  if (hex.size() != 7 || hex[0] != '#') {
    throw ParseError(0, "color must be '#rrggbb', got '" + std::string(hex) + "'");
  }
  double ch[3];
  for (int i = 0; i < 3; ++i) {
    const int hi = hex_digit(hex[1 + 2 * i]);
    const int lo = hex_digit(hex[2 + 2 * i]);
    if (hi < 0 || lo < 0) {
      throw ParseError(0, "color must be '#rrggbb', got '" + std::string(hex) + "'");
    }
    ch[i] = (hi * 16 + lo) / 255.0;
  }
  return {ch[0], ch[1], ch[2]};
}

std::string to_hex(const Rgb& c) {
  auto byte = [](double v) { return static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)); };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", byte(c.r), byte(c.g), byte(c.b));
  return buf;
}

double luma(const Rgb& c) { return 0.2126 * c.r + 0.7152 * c.g + 0.0722 * c.b; }

double hue_degrees(const Rgb& c) {
  const double mx = std::max({c.r, c.g, c.b});
  const double mn = std::min({c.r, c.g, c.b});
  const double d = mx - mn;
  if (d <= 0.0) return 0.0;
  double h;
  if (mx == c.r) {
    h = 60.0 * std::fmod((c.g - c.b) / d, 6.0);
  } else if (mx == c.g) {
    h = 60.0 * ((c.b - c.r) / d + 2.0);
  } else {
    h = 60.0 * ((c.r - c.g) / d + 4.0);
  }
  return h < 0.0 ? h + 360.0 : h;
}

}  // namespace synviz::palette
