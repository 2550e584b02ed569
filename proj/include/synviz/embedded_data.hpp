#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace synviz {

/// Text of a file under data/ compiled into the library, e.g.
/// "presets/oceanic.preset".
std::optional<std::string_view> embedded_file(std::string_view name);

std::vector<std::string_view> embedded_files();

}  // namespace synviz
