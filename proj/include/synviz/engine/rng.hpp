#pragma once

#include <cstdint>
#include <random>

#include "synviz/engine/vec3.hpp"

namespace synviz::engine {

/// Seeded generator whose output is identical on every platform. Only the
/// raw mt19937_64 stream is used; the std distributions are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniformly distributed direction on the unit sphere.
  Vec3 unit_vector();

 private:
  std::mt19937_64 gen_;
};

}  // namespace synviz::engine
