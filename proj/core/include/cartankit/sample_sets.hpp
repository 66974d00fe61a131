#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cartankit/sampling.hpp"
#include "cartankit/symmetries.hpp"
#include "cartankit/weyl.hpp"

namespace cartan {

/// Raised when rejection sampling cannot find enough admissible samples.
struct SampleExhaustion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoosSampleSet {
  std::vector<std::pair<ModelPoint, ModelPoint>> pairs;
  std::size_t rejected = 0;  // draws (or table pairs) whose image is not covered
};

/// Conjugation rules: `count` random pairs in the frame chart with s_x(y)
/// covered. Table rules: every ordered pair of centers whose image is a
/// center (count is ignored).
LoosSampleSet sample_loos_pairs(const SymmetrySystem& system, Sampler& rng, std::size_t count,
                                std::size_t max_attempts = 0);

/// Whether cocycle_check and distributivity_identity_check can evaluate the
/// sample: every point involved is covered and every displacement is in cell.
bool weyl_sample_admissible(const SymmetrySystem& system, const PairSample& sample);

struct WeylSampleSet {
  std::vector<PairSample> samples;
  std::size_t rejected = 0;
};

/// Conjugation rules: random x and random frames u0 (random G_0 part when
/// random_fiber is set). Table rules: all (center, canonical frame over a
/// center) combinations that are admissible (count is ignored).
WeylSampleSet sample_weyl_pairs(const SymmetrySystem& system, Sampler& rng, std::size_t count,
                                bool random_fiber = true, std::size_t max_attempts = 0);

}  // namespace cartan
