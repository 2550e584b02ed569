#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "synviz/audio/sample_hop.hpp"
#include "synviz/engine/vec3.hpp"
#include "synviz/palette/color.hpp"
#include "synviz/palette/tables.hpp"

namespace synviz::engine {

inline constexpr std::size_t kGroupCount = 12;
/// Side length of the cube each gravity point is confined to.
inline constexpr double kTargetCubeSide = 3.0;
/// Below this distance from its target a particle feels no pull.
inline constexpr double kArrivalEpsilon = 1e-6;

/// RGBA where alpha is not a color: it holds the particle's group index.
struct Rgba {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;
  double a = 0.0;

  bool operator==(const Rgba&) const = default;
};

/// Structure-of-arrays particle buffers; all three have the same length.
struct ParticleState {
  std::vector<Vec3> positions;
  std::vector<Vec3> velocities;
  std::vector<Rgba> colors;

  std::size_t size() const { return positions.size(); }
  std::size_t group_of(std::size_t i) const { return static_cast<std::size_t>(colors[i].a); }

  bool operator==(const ParticleState&) const = default;
};

struct SimConfig {
  std::size_t n_particles = 100000;
  std::uint64_t seed = 0;
  double dt = audio::kHopSeconds;
  double drag = 0.98;  // fraction of velocity kept per step
  double base_force = 1.0;
  double target_walk_scale = 1.0;

  /// Throws RangeError naming the offending key.
  void validate() const;

  bool operator==(const SimConfig&) const = default;
};

/// Per-group render inputs.
struct GroupParams {
  palette::Rgb u_color_rgb;
  Vec3 u_target;
  double u_force_amt = 0.0;
  double u_color_mag = 0.0;
  bool u_emphasis = false;
  double u_y_center = 0.0;

  bool operator==(const GroupParams&) const = default;
};

struct EngineParams {
  std::array<GroupParams, kGroupCount> groups{};
  double u_color_sensitivity = 2.0;

  bool operator==(const EngineParams&) const = default;
};

/// Vertical home of a group: -12 for group 0 up to 10 for group 11.
constexpr double y_center(std::size_t group) { return -12.0 + 2.0 * static_cast<double>(group); }

/// True if p lies in the side-3 cube around (0, y_center(group), 0).
bool in_group_cube(const Vec3& p, std::size_t group);
Vec3 clamp_to_group_cube(const Vec3& p, std::size_t group);

/// Particle i joins group i mod 12 at a uniform position in its cube, at rest,
/// colored with the group's base color.
ParticleState init_particles(const SimConfig& cfg, const palette::Palette& base);

/// Pull toward the group's gravity point: force * unit direction, or zero
/// within kArrivalEpsilon of the target.
Vec3 acceleration(const Vec3& position, const GroupParams& group);

/// clamp(base * color_mag * sensitivity, 0, 1) per channel, alpha passed through.
Rgba particle_color(const GroupParams& group, double color_sensitivity, double alpha);

/// One semi-implicit Euler step: v = drag * (v + a dt); p += v dt.
void step(ParticleState& state, const EngineParams& params, const SimConfig& cfg);

/// Names of every input the simulation consumes: 3 per-particle state
/// streams, 6 inputs for each of the 12 groups, and 1 global.
std::vector<std::string> declared_inputs();

inline constexpr std::array<const char*, 3> kStateStreams{"iPosition", "iVelocity", "iColor"};
inline constexpr std::array<const char*, 6> kGroupInputs{"uColorRGB", "uTarget",    "uForceAmt",
                                                         "uColorMag", "uEmphasis", "uYCenter"};
inline constexpr std::array<const char*, 1> kGlobalInputs{"uColorSensitivity"};

}  // namespace synviz::engine
