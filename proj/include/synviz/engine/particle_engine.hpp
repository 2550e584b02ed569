#pragma once

#include "synviz/engine/group_params.hpp"

namespace synviz::engine {

/// Particle buffers plus the moving gravity points, advanced one step per
/// analysis frame.
class ParticleEngine {
 public:
  ParticleEngine(const SimConfig& cfg, const palette::Palette& base);

  /// Derives this frame's group inputs and steps every particle once.
  const EngineParams& advance(const analysis::AnalysisFrame& frame, const palette::Preset& look,
                              const analysis::AnalysisConfig& analysis_cfg);

  /// Back to the seeded initial state: particles, gravity points and RNG.
  void reset(const palette::Palette& base);

  const ParticleState& state() const { return state_; }
  const EngineParams& params() const { return params_; }
  const Targets& targets() const { return targets_; }
  const SimConfig& config() const { return cfg_; }

 private:
  static std::uint64_t walk_seed(std::uint64_t seed) { return seed ^ 0x9E3779B97F4A7C15ull; }

  SimConfig cfg_;
  ParticleState state_;
  Targets targets_;
  Rng walk_rng_;
  EngineParams params_;
};

}  // namespace synviz::engine
