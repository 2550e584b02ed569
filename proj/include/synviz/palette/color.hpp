#pragma once

#include <string>
#include <string_view>

namespace synviz::palette {

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  bool operator==(const Rgb&) const = default;
};

/// "#rrggbb" (either case) to channels in [0, 1]. Throws ParseError.
Rgb parse_hex(std::string_view hex);

/// Lowercase "#rrggbb", channels rounded to the nearest 1/255.
std::string to_hex(const Rgb& c);

/// Rec. 709 luma, 0.2126 r + 0.7152 g + 0.0722 b.
double luma(const Rgb& c);

/// HSV hue in degrees [0, 360); 0 for greys.
double hue_degrees(const Rgb& c);

}  // namespace synviz::palette
