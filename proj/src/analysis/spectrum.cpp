#include "synviz/analysis/spectrum.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "synviz/analysis/fft.hpp"

namespace synviz::analysis {

MagnitudeSpectrum fft_magnitude(const audio::SampleHop& hop, Window window) {
  constexpr std::size_t n = audio::kHopSize;
  std::vector<std::complex<double>> data(n);
  for (std::size_t i = 0; i < n; ++i) {
    double w = 1.0;
    if (window == Window::hann) {
      w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
    }
    data[i] = hop.samples[i] * w;
  }
  fft_in_place(data);

  MagnitudeSpectrum out;
  for (std::size_t k = 0; k < kSpectrumSize; ++k) {
    out.magnitudes[k] = 2.0 * std::abs(data[k]);
  }
  return out;
}

}  // namespace synviz::analysis
