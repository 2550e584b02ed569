#include "synviz/analysis/bins.hpp"

#include <algorithm>

namespace synviz::analysis {

BinValues raw_bins(const MagnitudeSpectrum& spectrum) {
  BinValues out{};
  for (std::size_t b = 0; b < kBinCount; ++b) {
    double sum = 0.0;
    for (std::size_t k = kBinPartition[b].first; k <= kBinPartition[b].last; ++k) {
      sum += spectrum.magnitudes[k];
    }
    out[b] = sum / static_cast<double>(audio::kHopSize);
  }
  return out;
}

BinValues make_bins(const MagnitudeSpectrum& spectrum, const AnalysisConfig& cfg) {
  BinValues out = raw_bins(spectrum);
  for (double& v : out) v = std::min(v / cfg.range_max, 1.0);
  return out;
}

}  // namespace synviz::analysis
