#pragma once

#include <array>
#include <cstddef>

#include "synviz/analysis/analysis_config.hpp"
#include "synviz/analysis/spectrum.hpp"

namespace synviz::analysis {

inline constexpr std::size_t kBinCount = 12;

/// Twelve per-band values ordered low to high frequency.
using BinValues = std::array<double, kBinCount>;

/// Inclusive range of spectrum indices folded into one bin.
struct BinRange {
  std::size_t first;
  std::size_t last;

  constexpr std::size_t size() const { return last - first + 1; }
  /// Index used as the band's representative tone.
  constexpr std::size_t center() const { return (first + last + 1) / 2; }
  double low_hz() const { return static_cast<double>(first) * MagnitudeSpectrum::bin_width_hz; }
  /// Upper edge of the last index, e.g. 86.13 Hz for bin 0.
  double high_hz() const { return static_cast<double>(last + 1) * MagnitudeSpectrum::bin_width_hz; }
};

/// Near-geometric partition of the 512 folded points (ratio ~1.5).
inline constexpr std::array<BinRange, kBinCount> kBinPartition{{
    {0, 1},     {2, 4},     {5, 9},     {10, 16},   {17, 26},   {27, 41},
    {42, 64},   {65, 98},   {99, 149},  {150, 226}, {227, 341}, {342, 511},
}};

/// Sum of each band's magnitudes / 1024; a full-scale tone reads 1.0 in any band.
BinValues raw_bins(const MagnitudeSpectrum& spectrum);

/// raw_bins scaled by 1 / range_max and clamped to 1.
BinValues make_bins(const MagnitudeSpectrum& spectrum, const AnalysisConfig& cfg);

}  // namespace synviz::analysis
