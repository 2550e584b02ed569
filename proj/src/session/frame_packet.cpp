#include "synviz/session/frame_packet.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>

#include "synviz/error.hpp"

namespace synviz::session {

namespace {

class Writer {
 public:
  explicit Writer(std::uint8_t* p) : p_(p) {}

  void u8(std::uint8_t v) { *p_++ = v; }
  void u16(std::uint16_t v) { le(v, 2); }
  void u32(std::uint32_t v) { le(v, 4); }
  void u64(std::uint64_t v) { le(v, 8); }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

  void f32s(std::span<const float> vs) {
    if constexpr (std::endian::native == std::endian::little) {
      std::memcpy(p_, vs.data(), vs.size_bytes());
      p_ += vs.size_bytes();
    } else {
      for (float v : vs) f32(v);
    }
  }

 private:
  void le(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) *p_++ = static_cast<std::uint8_t>(v >> (8 * i));
  }
  std::uint8_t* p_;
};

class Reader {
 public:
  explicit Reader(const std::uint8_t* p) : p_(p) {}

  std::uint8_t u8() { return *p_++; }
  std::uint16_t u16() { return static_cast<std::uint16_t>(le(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
  std::uint64_t u64() { return le(8); }
  float f32() { return std::bit_cast<float>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }

  void f32s(std::span<float> out) {
    if constexpr (std::endian::native == std::endian::little) {
      std::memcpy(out.data(), p_, out.size_bytes());
      p_ += out.size_bytes();
    } else {
      for (float& v : out) v = f32();
    }
  }

 private:
  std::uint64_t le(int n) {
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<std::uint64_t>(*p_++) << (8 * i);
    return v;
  }
  const std::uint8_t* p_;
};

template <std::size_t N>
std::array<float, N> to_f32(const std::array<double, N>& in) {
  std::array<float, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = static_cast<float>(in[i]);
  return out;
}

}  // namespace

void encode_into(const FramePacket& p, std::vector<std::uint8_t>& out) {
  if (p.particles.size() % kParticleFloats != 0) {
    throw DecodeError("particle buffer length is not a multiple of 10");
  }
  const std::size_t start = out.size();
  out.resize(start + p.encoded_size());
  Writer w(out.data() + start);

  for (std::uint8_t c : kMagic) w.u8(c);
  w.u64(p.frame_index);
  w.f64(p.timestamp_s);

  w.f32s(p.bins);
  w.f32s(p.avg_bins);
  w.f32s(p.volatility);
  w.f32s(p.avg_volatility);
  w.u16(p.trigger_mask);
  w.f32(p.dynamics_percent);

  for (const WireGroup& g : p.groups) {
    w.f32s(g.rgb);
    w.f32s(g.target);
    w.f32(g.force_amt);
    w.f32(g.color_mag);
    w.f32(g.y_center);
    w.u8(g.emphasis ? 1 : 0);
  }
  w.f32(p.color_sensitivity);

  w.u32(static_cast<std::uint32_t>(p.particle_count()));
  w.f32s(p.particles);
}

std::vector<std::uint8_t> encode(const FramePacket& packet) {
  std::vector<std::uint8_t> out;
  encode_into(packet, out);
  return out;
}

std::optional<std::size_t> peek_packet_size(std::span<const std::uint8_t> bytes) {
  const std::size_t magic_len = std::min(bytes.size(), kMagic.size());
  if (magic_len > 0 && std::memcmp(bytes.data(), kMagic.data(), magic_len) != 0) {
    throw DecodeError("bad frame magic");
  }
  if (bytes.size() < kFixedBytes) return std::nullopt;
  Reader r(bytes.data() + kFixedBytes - 4);
  const std::uint32_t count = r.u32();
  return kFixedBytes + static_cast<std::size_t>(count) * kParticleStride;
}

FramePacket decode(std::span<const std::uint8_t> bytes) {
  const auto size = peek_packet_size(bytes);
  if (!size) {
    throw DecodeError("frame too short: " + std::to_string(bytes.size()) + " bytes");
  }
  if (*size != bytes.size()) {
    throw DecodeError("frame length mismatch: header implies " + std::to_string(*size) + " bytes, got " +
                      std::to_string(bytes.size()));
  }

  FramePacket p;
  Reader r(bytes.data() + kMagic.size());
  p.frame_index = r.u64();
  p.timestamp_s = r.f64();

  r.f32s(p.bins);
  r.f32s(p.avg_bins);
  r.f32s(p.volatility);
  r.f32s(p.avg_volatility);
  p.trigger_mask = r.u16();
  if (p.trigger_mask >> 12) throw DecodeError("trigger mask has bits above bin 11");
  p.dynamics_percent = r.f32();

  for (WireGroup& g : p.groups) {
    r.f32s(g.rgb);
    r.f32s(g.target);
    g.force_amt = r.f32();
    g.color_mag = r.f32();
    g.y_center = r.f32();
    const std::uint8_t e = r.u8();
    if (e > 1) throw DecodeError("emphasis flag must be 0 or 1");
    g.emphasis = e == 1;
  }
  p.color_sensitivity = r.f32();

  const std::uint32_t count = r.u32();
  p.particles.resize(static_cast<std::size_t>(count) * kParticleFloats);
  r.f32s(p.particles);
  return p;
}

FramePacket snapshot(const engine::ParticleState& state, const analysis::AnalysisFrame& frame,
                     const engine::EngineParams& params, std::uint64_t frame_index) {
  FramePacket p;
  p.frame_index = frame_index;
  p.timestamp_s = static_cast<double>(frame_index) * audio::kHopSeconds;

  p.bins = to_f32(frame.bins);
  p.avg_bins = to_f32(frame.avg_bins);
  p.volatility = to_f32(frame.volatility);
  p.avg_volatility = to_f32(frame.avg_volatility);
  p.trigger_mask = static_cast<std::uint16_t>(frame.triggers.to_ulong());
  p.dynamics_percent = static_cast<float>(frame.dynamics_percent);

  for (std::size_t g = 0; g < engine::kGroupCount; ++g) {
    const engine::GroupParams& src = params.groups[g];
    WireGroup& dst = p.groups[g];
    dst.rgb = {static_cast<float>(src.u_color_rgb.r), static_cast<float>(src.u_color_rgb.g),
               static_cast<float>(src.u_color_rgb.b)};
    dst.target = {static_cast<float>(src.u_target.x), static_cast<float>(src.u_target.y),
                  static_cast<float>(src.u_target.z)};
    dst.force_amt = static_cast<float>(src.u_force_amt);
    dst.color_mag = static_cast<float>(src.u_color_mag);
    dst.y_center = static_cast<float>(src.u_y_center);
    dst.emphasis = src.u_emphasis;
  }
  p.color_sensitivity = static_cast<float>(params.u_color_sensitivity);

  const std::size_t n = state.size();
  p.particles.resize(n * kParticleFloats);
  float* out = p.particles.data();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pos = state.positions[i];
    const auto& vel = state.velocities[i];
    const auto& col = state.colors[i];
    out[0] = static_cast<float>(pos.x);
    out[1] = static_cast<float>(pos.y);
    out[2] = static_cast<float>(pos.z);
    out[3] = static_cast<float>(vel.x);
    out[4] = static_cast<float>(vel.y);
    out[5] = static_cast<float>(vel.z);
    out[6] = static_cast<float>(col.r);
    out[7] = static_cast<float>(col.g);
    out[8] = static_cast<float>(col.b);
    out[9] = static_cast<float>(col.a);
    out += kParticleFloats;
  }
  return p;
}

}  // namespace synviz::session
