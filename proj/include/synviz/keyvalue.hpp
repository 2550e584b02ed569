#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace synviz {

struct KeyValue {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

/// Parses UTF-8 `key = value` lines. Blank lines and lines whose first
/// non-blank character is `#` are skipped; `#` elsewhere is literal, so hex
/// colors need no quoting. Keys and values are trimmed. Throws ParseError.
std::vector<KeyValue> parse_key_values(std::string_view text);

/// Shortest text that parses back to the same double.
std::string format_number(double v);

/// Strict full-string number parse; throws ParseError on junk.
double parse_number(const std::string& text, std::size_t line);

}  // namespace synviz
