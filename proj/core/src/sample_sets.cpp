#include "cartankit/sample_sets.hpp"

namespace cartan {

namespace {

std::size_t attempt_budget(std::size_t count, std::size_t max_attempts) {
  return max_attempts ? max_attempts : 50 * count + 100;
}

ModelPoint random_frame_point(const SymmetrySystem& system, Sampler& rng) {
  return system.point_at_frame_coordinates(rng.rational_vector(system.model().dimension()));
}

bool image_covered(const SymmetrySystem& system, const ModelPoint& x, const ModelPoint& y) {
  if (!system.covers(x) || !system.covers(y)) return false;
  return system.covers(act(system.at(x).element, y));
}

}  // namespace

LoosSampleSet sample_loos_pairs(const SymmetrySystem& system, Sampler& rng, std::size_t count,
                                std::size_t max_attempts) {
  LoosSampleSet out;
  if (const auto* table = system.table_rule()) {
    for (const auto& a : table->entries)
      for (const auto& b : table->entries) {
        if (system.covers(act(a.element, b.center)))
          out.pairs.emplace_back(a.center, b.center);
        else
          ++out.rejected;
      }
    return out;
  }
  const std::size_t budget = attempt_budget(count, max_attempts);
  for (std::size_t attempt = 0; out.pairs.size() < count; ++attempt) {
    if (attempt >= budget) throw SampleExhaustion("could not draw enough in-cell Loos pairs");
    ModelPoint x = random_frame_point(system, rng);
    ModelPoint y = random_frame_point(system, rng);
    if (image_covered(system, x, y))
      out.pairs.emplace_back(std::move(x), std::move(y));
    else
      ++out.rejected;
  }
  return out;
}

bool weyl_sample_admissible(const SymmetrySystem& system, const PairSample& sample) {
  const FlatModel& model = system.model();
  try {
    const ModelPoint y = base_point(model, sample.u0);
    if (!image_covered(system, sample.x, y)) return false;
    const GroupElement sx = system.at(sample.x).element;
    const GroupElement sy = system.at(y).element;
    const GroupElement sxy = system.at(act(sx, y)).element;
    const Displacement at_x = displacement(model, sx, sample.u0);
    const Displacement at_y = displacement(model, sy, sample.u0);
    if (!system.covers(base_point(model, at_x.image))) return false;
    (void)displacement(model, sx, at_y.image);
    (void)displacement(model, sxy, at_x.image);
    return true;
  } catch (const OffCell&) {
    return false;
  } catch (const UncoveredPoint&) {
    return false;
  }
}

WeylSampleSet sample_weyl_pairs(const SymmetrySystem& system, Sampler& rng, std::size_t count, bool random_fiber,
                                std::size_t max_attempts) {
  const FlatModel& model = system.model();
  WeylSampleSet out;
  if (const auto* table = system.table_rule()) {
    for (const auto& a : table->entries)
      for (const auto& b : table->entries) {
        const auto y = model.chart_coordinates(b.center);
        if (!y) {
          ++out.rejected;
          continue;
        }
        PairSample s{a.center, make_frame(model, *y)};
        if (weyl_sample_admissible(system, s))
          out.samples.push_back(std::move(s));
        else
          ++out.rejected;
      }
    return out;
  }
  const std::size_t budget = attempt_budget(count, max_attempts);
  for (std::size_t attempt = 0; out.samples.size() < count; ++attempt) {
    if (attempt >= budget) throw SampleExhaustion("could not draw enough admissible frame samples");
    ModelPoint x = random_frame_point(system, rng);
    const auto y = rng.rational_vector(model.dimension());
    std::optional<GroupElement> g0;
    if (random_fiber) g0 = random_g0(model, rng);
    PairSample s{std::move(x), make_frame(model, y, g0)};
    if (weyl_sample_admissible(system, s))
      out.samples.push_back(std::move(s));
    else
      ++out.rejected;
  }
  return out;
}

}  // namespace cartan
