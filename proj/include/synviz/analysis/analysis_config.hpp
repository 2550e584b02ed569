#pragma once

#include <cstddef>
#include <string>

namespace synviz::analysis {

enum class Window { rectangular, hann };

std::string to_string(Window w);
/// Accepts "rect", "rectangular" and "hann".
Window parse_window(const std::string& name);

inline constexpr std::size_t kMaxWindowLength = 1024;

struct AnalysisConfig {
  std::size_t n_avg = 4;
  std::size_t n_vol = 8;
  double trigger_val = 70.0;   // percent of max_trigger
  double max_trigger = 0.15;
  double max_average = 0.3;
  double range_max = 0.3;
  double min_db = -60.0;
  double max_db = 0.0;
  Window window = Window::rectangular;

  /// Throws RangeError naming the offending key.
  void validate() const;

  /// Volatility threshold, (trigger_val / 100) * max_trigger.
  double trigger_threshold() const { return trigger_val * max_trigger / 100.0; }

  bool operator==(const AnalysisConfig&) const = default;
};

}  // namespace synviz::analysis
