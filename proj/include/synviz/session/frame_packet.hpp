#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "synviz/analysis/analyzer.hpp"
#include "synviz/engine/particles.hpp"

namespace synviz::session {

// Wire layout, all little-endian:
//
//   header     "SYN1" | frame_index u64 | timestamp_s f64                 20 B
//   analysis   bins, avg_bins, volatility, avg_volatility (4 x 12 f32)
//              | trigger mask u16 (bit i = bin i) | dynamics_percent f32  198 B
//   params     12 x { rgb 3xf32 | target 3xf32 | force_amt f32
//                     | color_mag f32 | y_center f32 | emphasis u8 }
//              | color_sensitivity f32                                   448 B
//   particles  count u32 | count x { px py pz vx vy vz r g b a } f32    4 + 40n B

inline constexpr std::array<std::uint8_t, 4> kMagic{'S', 'Y', 'N', '1'};
inline constexpr std::size_t kHeaderBytes = 20;
inline constexpr std::size_t kAnalysisBytes = 4 * 12 * 4 + 2 + 4;
inline constexpr std::size_t kGroupBytes = 9 * 4 + 1;
inline constexpr std::size_t kParamsBytes = 12 * kGroupBytes + 4;
inline constexpr std::size_t kParticleFloats = 10;
inline constexpr std::size_t kParticleStride = kParticleFloats * 4;
/// Bytes before the first particle, including the count field.
inline constexpr std::size_t kFixedBytes = kHeaderBytes + kAnalysisBytes + kParamsBytes + 4;

struct WireGroup {
  std::array<float, 3> rgb{};
  std::array<float, 3> target{};
  float force_amt = 0.0f;
  float color_mag = 0.0f;
  float y_center = 0.0f;
  bool emphasis = false;

  bool operator==(const WireGroup&) const = default;
};

struct FramePacket {
  std::uint64_t frame_index = 0;
  double timestamp_s = 0.0;

  std::array<float, 12> bins{};
  std::array<float, 12> avg_bins{};
  std::array<float, 12> volatility{};
  std::array<float, 12> avg_volatility{};
  std::uint16_t trigger_mask = 0;
  float dynamics_percent = 0.0f;

  std::array<WireGroup, 12> groups{};
  float color_sensitivity = 0.0f;

  /// kParticleFloats values per particle: px py pz vx vy vz r g b a.
  std::vector<float> particles;

  std::size_t particle_count() const { return particles.size() / kParticleFloats; }
  std::size_t encoded_size() const { return kFixedBytes + particles.size() * 4; }

  bool operator==(const FramePacket&) const = default;
};

/// Appends the encoded packet to `out`.
void encode_into(const FramePacket& packet, std::vector<std::uint8_t>& out);
std::vector<std::uint8_t> encode(const FramePacket& packet);

/// Decodes exactly one packet occupying all of `bytes`. Throws DecodeError.
FramePacket decode(std::span<const std::uint8_t> bytes);

/// Size of the packet starting at `bytes`, once enough of its prefix is
/// present to tell; nullopt if more bytes are needed. Throws DecodeError on
/// a bad magic.
std::optional<std::size_t> peek_packet_size(std::span<const std::uint8_t> bytes);

/// Wire form of the engine's current state. Does not modify anything.
FramePacket snapshot(const engine::ParticleState& state, const analysis::AnalysisFrame& frame,
                     const engine::EngineParams& params, std::uint64_t frame_index);

}  // namespace synviz::session
