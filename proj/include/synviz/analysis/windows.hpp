#pragma once

#include <bitset>
#include <cstddef>
#include <deque>
#include <span>

#include "synviz/analysis/analysis_config.hpp"
#include "synviz/analysis/bins.hpp"

namespace synviz::analysis {

using Triggers = std::bitset<kBinCount>;

/// Per-bin mean of the last min(n, history.size()) frames of `history`
/// (oldest first). Empty history yields zeros.
BinValues window_mean(std::span<const BinValues> history, std::size_t n);

/// Mean over `history` followed by `current`, limited to the newest n frames.
BinValues update_running_avg(std::span<const BinValues> history,
                             const BinValues& current, std::size_t n);

/// |current - avg| per bin.
BinValues volatility(const BinValues& current, const BinValues& avg);

/// Mean of the newest n volatility frames (warm-up averages what exists).
BinValues avg_volatility(std::span<const BinValues> history, std::size_t n);

/// Seconds spanned by n hops: n * 1024 / 44100.
double window_duration_seconds(std::size_t n);

/// Bin i fires when volatility[i] > threshold (strict).
Triggers compute_triggers(const BinValues& volatility, const AnalysisConfig& cfg);

/// Linear map of [min_db, max_db] onto [0, 100], clamped.
double dynamics_percent(double db, const AnalysisConfig& cfg);

/// Bounded history of the newest frames, used for both averaging windows.
class RollingWindow {
 public:
  explicit RollingWindow(std::size_t length);

  /// Appends a frame and returns the mean of the window including it.
  BinValues push(const BinValues& frame);

  /// Shrinking drops the oldest frames; growing lets the window refill.
  void set_length(std::size_t length);
  std::size_t length() const { return length_; }
  std::size_t size() const { return frames_.size(); }
  void clear() { frames_.clear(); }

 private:
  std::size_t length_;
  std::deque<BinValues> frames_;
};

}  // namespace synviz::analysis
