#pragma once

#include <array>
#include <cstddef>

#include "synviz/analysis/analysis_config.hpp"
#include "synviz/audio/sample_hop.hpp"

namespace synviz::analysis {

inline constexpr std::size_t kSpectrumSize = audio::kHopSize / 2;

/// First half of the FFT magnitudes of one hop, each doubled ("folded").
struct MagnitudeSpectrum {
  static constexpr double bin_width_hz = audio::kSampleRate / static_cast<double>(audio::kHopSize);

  std::array<double, kSpectrumSize> magnitudes{};
};

/// Discards phase, keeps indices 0..511 and doubles them, DC included.
MagnitudeSpectrum fft_magnitude(const audio::SampleHop& hop,
                                Window window = Window::rectangular);

}  // namespace synviz::analysis
