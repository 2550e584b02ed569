#include "synviz/analysis/analyzer.hpp"

#include "synviz/analysis/spectrum.hpp"
#include "synviz/error.hpp"

namespace synviz::analysis {

std::string to_string(Window w) { return w == Window::hann ? "hann" : "rect"; }

Window parse_window(const std::string& name) {
  if (name == "rect" || name == "rectangular") return Window::rectangular;
  if (name == "hann") return Window::hann;
  throw RangeError("window", "expected rect or hann, got '" + name + "'");
}

void AnalysisConfig::validate() const {
  if (n_avg < 1 || n_avg > kMaxWindowLength) {
    throw RangeError("num-points-to-average", "must be in [1, 1024]");
  }
  if (n_vol < 1 || n_vol > kMaxWindowLength) {
    throw RangeError("num-points-to-average-vol", "must be in [1, 1024]");
  }
  if (!(trigger_val >= 0.0 && trigger_val <= 100.0)) {
    throw RangeError("trigger-val", "must be in [0, 100]");
  }
  if (!(max_trigger > 0.0)) throw RangeError("max-trigger", "must be > 0");
  if (!(max_average > 0.0)) throw RangeError("max-average", "must be > 0");
  if (!(range_max > 0.0 && range_max <= 1.0)) throw RangeError("range_max", "must be in (0, 1]");
  if (!(max_db > min_db)) throw RangeError("max-db", "must be greater than min-db");
}

Analyzer::Analyzer(const AnalysisConfig& cfg)
    : cfg_(cfg), bin_history_(cfg.n_avg), vol_history_(cfg.n_vol) {
  cfg_.validate();
}

AnalysisFrame Analyzer::analyze(const audio::SampleHop& hop) {
  AnalysisFrame frame;
  frame.hop_index = hop.index;
  frame.bins = make_bins(fft_magnitude(hop, cfg_.window), cfg_);
  frame.avg_bins = bin_history_.push(frame.bins);
  frame.volatility = volatility(frame.bins, frame.avg_bins);
  frame.avg_volatility = vol_history_.push(frame.volatility);
  frame.triggers = compute_triggers(frame.volatility, cfg_);
  frame.dynamics_percent = dynamics_percent(audio::rms_db(hop), cfg_);
  return frame;
}

void Analyzer::set_config(const AnalysisConfig& cfg) {
  cfg.validate();
  cfg_ = cfg;
  bin_history_.set_length(cfg.n_avg);
  vol_history_.set_length(cfg.n_vol);
}

void Analyzer::reset() {
  bin_history_.clear();
  vol_history_.clear();
}

}  // namespace synviz::analysis
