#pragma once

#include <array>

#include "synviz/analysis/analysis_config.hpp"
#include "synviz/analysis/analyzer.hpp"
#include "synviz/engine/particles.hpp"
#include "synviz/engine/rng.hpp"
#include "synviz/palette/preset.hpp"

namespace synviz::engine {

using Targets = std::array<Vec3, kGroupCount>;

/// Gravity points at rest: (0, y_center(g), 0).
Targets initial_targets();

/// Maps one analysis frame onto the 12 groups' inputs.
///
/// color_mag   = clamp(avg_bins / max_average, 0, 1)
/// force_amt   = base_force * (0.5 + avg_bins), doubled when the bin triggered
/// target      = previous target + random direction * walk_scale *
///               (avg_volatility / max_trigger) * dt, clamped to the group cube
///
/// Base colors and color sensitivity come from `look`. Draws exactly two
/// random numbers per group regardless of the frame contents.
EngineParams derive_group_params(const analysis::AnalysisFrame& frame, const palette::Preset& look,
                                 const analysis::AnalysisConfig& analysis_cfg, const SimConfig& cfg,
                                 const Targets& previous, Rng& rng);

/// u_force_amt for one group before emphasis doubling.
double base_force_amount(double avg_bin, const SimConfig& cfg);

}  // namespace synviz::engine
