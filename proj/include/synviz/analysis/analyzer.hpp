#pragma once

#include <cstdint>

#include "synviz/analysis/analysis_config.hpp"
#include "synviz/analysis/bins.hpp"
#include "synviz/analysis/windows.hpp"
#include "synviz/audio/sample_hop.hpp"

namespace synviz::analysis {

struct AnalysisFrame {
  BinValues bins{};
  BinValues avg_bins{};
  BinValues volatility{};
  BinValues avg_volatility{};
  Triggers triggers;
  double dynamics_percent = 0.0;
  std::uint64_t hop_index = 0;

  bool operator==(const AnalysisFrame&) const = default;
};

/// Runs the per-hop chain: spectrum, bins, running average, volatility,
/// averaged volatility, triggers and dynamics. Owns the two rolling windows.
class Analyzer {
 public:
  explicit Analyzer(const AnalysisConfig& cfg = {});

  AnalysisFrame analyze(const audio::SampleHop& hop);

  /// Takes effect from the next analyze() call; window lengths adapt in place.
  void set_config(const AnalysisConfig& cfg);
  const AnalysisConfig& config() const { return cfg_; }

  /// Forgets all history, as for a newly loaded song.
  void reset();

 private:
  AnalysisConfig cfg_;
  RollingWindow bin_history_;
  RollingWindow vol_history_;
};

}  // namespace synviz::analysis
