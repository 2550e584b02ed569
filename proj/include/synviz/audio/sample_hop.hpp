#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace synviz::audio {

inline constexpr std::size_t kHopSize = 1024;
inline constexpr double kSampleRate = 44100.0;
inline constexpr double kSilenceFloorDb = -120.0;

/// Seconds of audio covered by one hop (~23.22 ms).
inline constexpr double kHopSeconds = static_cast<double>(kHopSize) / kSampleRate;

/// One fixed-size block of mono audio. Samples past `valid` are zero padding.
struct SampleHop {
  std::array<double, kHopSize> samples{};
  std::uint64_t index = 0;
  double sample_rate = kSampleRate;
  std::size_t valid = kHopSize;
  bool last = false;

  bool padded() const { return valid < kHopSize; }
};

/// 20*log10(rms) in dBFS, never below `floor_db`.
double rms_db(const SampleHop& hop, double floor_db = kSilenceFloorDb);

}  // namespace synviz::audio
