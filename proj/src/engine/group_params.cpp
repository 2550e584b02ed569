#include "synviz/engine/group_params.hpp"

#include <algorithm>

namespace synviz::engine {

Targets initial_targets() {
  Targets t;
  for (std::size_t g = 0; g < kGroupCount; ++g) t[g] = {0.0, y_center(g), 0.0};
  return t;
}

double base_force_amount(double avg_bin, const SimConfig& cfg) {
  return cfg.base_force * (0.5 + avg_bin);
}

EngineParams derive_group_params(const analysis::AnalysisFrame& frame, const palette::Preset& look,
                                 const analysis::AnalysisConfig& analysis_cfg, const SimConfig& cfg,
                                 const Targets& previous, Rng& rng) {
  EngineParams out;
  out.u_color_sensitivity = look.color_sensitivity;
  for (std::size_t g = 0; g < kGroupCount; ++g) {
    GroupParams& p = out.groups[g];
    const double avg = frame.avg_bins[g];
    p.u_color_rgb = look.base[g];
    p.u_color_mag = std::clamp(avg / analysis_cfg.max_average, 0.0, 1.0);
    p.u_emphasis = frame.triggers[g];
    p.u_force_amt = base_force_amount(avg, cfg);
    if (p.u_emphasis) p.u_force_amt *= 2.0;
    p.u_y_center = y_center(g);

    const Vec3 dir = rng.unit_vector();
    const double magnitude =
        cfg.target_walk_scale * (frame.avg_volatility[g] / analysis_cfg.max_trigger) * cfg.dt;
    p.u_target = clamp_to_group_cube(previous[g] + dir * magnitude, g);
  }
  return out;
}

}  // namespace synviz::engine
