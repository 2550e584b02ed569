#include "synviz/engine/particles.hpp"

#include <algorithm>

#include "synviz/engine/rng.hpp"
#include "synviz/error.hpp"

namespace synviz::engine {

void SimConfig::validate() const {
  if (n_particles < kGroupCount) throw RangeError("particles", "must be >= 12");
  if (!(drag > 0.0 && drag <= 1.0)) throw RangeError("drag", "must be in (0, 1]");
  if (!(dt > 0.0)) throw RangeError("dt", "must be > 0");
  if (!(base_force >= 0.0)) throw RangeError("base-force", "must be >= 0");
  if (!(target_walk_scale >= 0.0)) throw RangeError("target-walk-scale", "must be >= 0");
}

bool in_group_cube(const Vec3& p, std::size_t group) {
  constexpr double h = kTargetCubeSide / 2.0;
  const double yc = y_center(group);
  return p.x >= -h && p.x <= h && p.y >= yc - h && p.y <= yc + h && p.z >= -h && p.z <= h;
}

Vec3 clamp_to_group_cube(const Vec3& p, std::size_t group) {
  constexpr double h = kTargetCubeSide / 2.0;
  const double yc = y_center(group);
  return {std::clamp(p.x, -h, h), std::clamp(p.y, yc - h, yc + h), std::clamp(p.z, -h, h)};
}

ParticleState init_particles(const SimConfig& cfg, const palette::Palette& base) {
  cfg.validate();
  constexpr double h = kTargetCubeSide / 2.0;
  Rng rng(cfg.seed);
  ParticleState s;
  s.positions.resize(cfg.n_particles);
  s.velocities.assign(cfg.n_particles, Vec3{});
  s.colors.resize(cfg.n_particles);
  for (std::size_t i = 0; i < cfg.n_particles; ++i) {
    const std::size_t g = i % kGroupCount;
    const double x = rng.uniform(-h, h);
    const double y = rng.uniform(-h, h);
    const double z = rng.uniform(-h, h);
    s.positions[i] = {x, y_center(g) + y, z};
    s.colors[i] = {base[g].r, base[g].g, base[g].b, static_cast<double>(g)};
  }
  return s;
}

Vec3 acceleration(const Vec3& position, const GroupParams& group) {
  const Vec3 d = group.u_target - position;
  const double dist = d.norm();
  if (dist < kArrivalEpsilon) return {};
  return d * (group.u_force_amt / dist);
}

Rgba particle_color(const GroupParams& group, double color_sensitivity, double alpha) {
  const double k = group.u_color_mag * color_sensitivity;
  return {std::clamp(group.u_color_rgb.r * k, 0.0, 1.0), std::clamp(group.u_color_rgb.g * k, 0.0, 1.0),
          std::clamp(group.u_color_rgb.b * k, 0.0, 1.0), alpha};
}

void step(ParticleState& state, const EngineParams& params, const SimConfig& cfg) {
  std::array<Rgba, kGroupCount> colors;
  for (std::size_t g = 0; g < kGroupCount; ++g) {
    colors[g] = particle_color(params.groups[g], params.u_color_sensitivity, static_cast<double>(g));
  }
  const double dt = cfg.dt;
  const double drag = cfg.drag;
  const std::size_t n = state.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t g = state.group_of(i);
    const Vec3 a = acceleration(state.positions[i], params.groups[g]);
    Vec3& v = state.velocities[i];
    v = (v + a * dt) * drag;
    state.positions[i] += v * dt;
    state.colors[i] = colors[g];
  }
}

std::vector<std::string> declared_inputs() {
  std::vector<std::string> out(kStateStreams.begin(), kStateStreams.end());
  for (std::size_t g = 0; g < kGroupCount; ++g) {
    for (const char* name : kGroupInputs) out.push_back(std::string(name) + "[" + std::to_string(g) + "]");
  }
  out.insert(out.end(), kGlobalInputs.begin(), kGlobalInputs.end());
  return out;
}

}  // namespace synviz::engine
