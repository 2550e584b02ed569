#include "synviz/analysis/windows.hpp"

#include <algorithm>
#include <cmath>

#include "synviz/audio/sample_hop.hpp"

namespace synviz::analysis {

BinValues window_mean(std::span<const BinValues> history, std::size_t n) {
  BinValues out{};
  const std::size_t count = std::min(n, history.size());
  if (count == 0) return out;
  for (const BinValues& frame : history.last(count)) {
    for (std::size_t i = 0; i < kBinCount; ++i) out[i] += frame[i];
  }
  for (double& v : out) v /= static_cast<double>(count);
  return out;
}

BinValues update_running_avg(std::span<const BinValues> history,
                             const BinValues& current, std::size_t n) {
  std::vector<BinValues> frames(history.begin(), history.end());
  frames.push_back(current);
  return window_mean(frames, n);
}

BinValues volatility(const BinValues& current, const BinValues& avg) {
  BinValues out{};
  for (std::size_t i = 0; i < kBinCount; ++i) out[i] = std::abs(current[i] - avg[i]);
  return out;
}

BinValues avg_volatility(std::span<const BinValues> history, std::size_t n) {
  return window_mean(history, n);
}

double window_duration_seconds(std::size_t n) {
  return static_cast<double>(n) * (static_cast<double>(audio::kHopSize) / audio::kSampleRate);
}

Triggers compute_triggers(const BinValues& volatility, const AnalysisConfig& cfg) {
  const double threshold = cfg.trigger_threshold();
  Triggers out;
  for (std::size_t i = 0; i < kBinCount; ++i) out[i] = volatility[i] > threshold;
  return out;
}

double dynamics_percent(double db, const AnalysisConfig& cfg) {
  const double pct = 100.0 * (db - cfg.min_db) / (cfg.max_db - cfg.min_db);
  return std::clamp(pct, 0.0, 100.0);
}

RollingWindow::RollingWindow(std::size_t length) : length_(std::max<std::size_t>(length, 1)) {}

BinValues RollingWindow::push(const BinValues& frame) {
  frames_.push_back(frame);
  while (frames_.size() > length_) frames_.pop_front();

  BinValues out{};
  for (const BinValues& f : frames_) {
    for (std::size_t i = 0; i < kBinCount; ++i) out[i] += f[i];
  }
  for (double& v : out) v /= static_cast<double>(frames_.size());
  return out;
}

void RollingWindow::set_length(std::size_t length) {
  length_ = std::max<std::size_t>(length, 1);
  while (frames_.size() > length_) frames_.pop_front();
}

}  // namespace synviz::analysis
