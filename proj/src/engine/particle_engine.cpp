#include "synviz/engine/particle_engine.hpp"

namespace synviz::engine {

ParticleEngine::ParticleEngine(const SimConfig& cfg, const palette::Palette& base)
    : cfg_(cfg), state_(init_particles(cfg, base)), targets_(initial_targets()), walk_rng_(walk_seed(cfg.seed)) {
  for (std::size_t g = 0; g < kGroupCount; ++g) {
    params_.groups[g].u_color_rgb = base[g];
    params_.groups[g].u_target = targets_[g];
    params_.groups[g].u_y_center = y_center(g);
  }
}

const EngineParams& ParticleEngine::advance(const analysis::AnalysisFrame& frame, const palette::Preset& look,
                                            const analysis::AnalysisConfig& analysis_cfg) {
  params_ = derive_group_params(frame, look, analysis_cfg, cfg_, targets_, walk_rng_);
  for (std::size_t g = 0; g < kGroupCount; ++g) targets_[g] = params_.groups[g].u_target;
  step(state_, params_, cfg_);
  return params_;
}

void ParticleEngine::reset(const palette::Palette& base) { *this = ParticleEngine(cfg_, base); }

}  // namespace synviz::engine
