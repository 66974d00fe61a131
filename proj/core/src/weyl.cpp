#include "cartankit/weyl.hpp"

#include "cartankit/parallel.hpp"

namespace cartan {

Frame make_frame(const FlatModel& model, const std::vector<Rat>& x, const std::optional<GroupElement>& g0) {
  GroupElement part = g0 ? *g0 : model.identity();
  if (!model.in_g0(part)) throw std::invalid_argument("frame: g0 part must preserve the grading");
  return Frame{model.minus_element(x), std::move(part)};
}

ModelPoint base_point(const FlatModel& model, const Frame& u) { return model.point_at(u.base_x.grade_coords(-1)); }

GroupElement gauge_section(const FlatModel& model, const Frame& u, const std::optional<AlgElement>& shift) {
  GroupElement s = model.exp_nilpotent(u.base_x) * u.g0;
  if (shift && !shift->is_zero()) s = s * model.exp_nilpotent(adjoint_action(u.g0.inverse(), *shift));
  return s;
}

Displacement displacement(const FlatModel& model, const GroupElement& s, const Frame& u0,
                          const std::optional<AlgElement>& gauge_shift) {
  auto f = big_cell_decompose(model, s * gauge_section(model, u0, gauge_shift));
  if (!f) throw OffCell("displacement: image frame lies outside the big cell");
  Frame image{std::move(f->x), std::move(f->g0)};
  AlgElement disp = std::move(f->z);
  if (gauge_shift && !gauge_shift->is_zero()) disp -= adjoint_action(image.g0.inverse(), *gauge_shift);
  return {std::move(disp), std::move(image)};
}

AlgElement UpsilonField::compute_canonical(const std::vector<Rat>& x) const {
  const FlatModel& model = system_.model();
  const Frame u = make_frame(model, x);
  const Symmetry s = system_.at(base_point(model, u));
  return Rat(-1, 2) * displacement(model, s.element, u).f;
}

AlgElement UpsilonField::operator()(const Frame& u) const {
  const auto x = u.base_x.grade_coords(-1);
  const auto it = stored_.find(x);
  const AlgElement canonical = it != stored_.end() ? it->second : compute_canonical(x);
  if (u.g0.is_identity()) return canonical;
  return adjoint_action(u.g0.inverse(), canonical);
}

UpsilonField upsilon_from_system(const SymmetrySystem& system, const std::vector<Frame>& frames) {
  UpsilonField field(system);
  auto values = parallel_map(frames.size(), [&](std::size_t i) {
    const Frame& u = frames[i];
    const FlatModel& model = system.model();
    const Symmetry s = system.at(base_point(model, u));
    const AlgElement at_frame = Rat(-1, 2) * displacement(model, s.element, u).f;
    // Store the canonical representative: Upsilon(u) = Ad_{g^-1} Upsilon(u g^-1).
    return adjoint_action(u.g0, at_frame);
  });
  for (std::size_t i = 0; i < frames.size(); ++i) field.store(frames[i].base_x.grade_coords(-1), values[i]);
  return field;
}

namespace {

CheckReport collect(std::vector<std::optional<CheckViolation>> results) {
  CheckReport report;
  report.checked = results.size();
  for (auto& r : results)
    if (r) report.violations.push_back(std::move(*r));
  return report;
}

}  // namespace

CheckReport cocycle_check(const SymmetrySystem& system, const UpsilonField& upsilon,
                          const std::vector<PairSample>& samples) {
  const FlatModel& model = system.model();
  return collect(parallel_map(samples.size(), [&](std::size_t i) -> std::optional<CheckViolation> {
    const auto& [x, u0] = samples[i];
    const Displacement d = displacement(model, system.at(x).element, u0);
    AlgElement residual = d.f - (upsilon(d.image) - upsilon(u0));
    if (residual.is_zero()) return std::nullopt;
    return CheckViolation{i, x, u0, std::move(residual)};
  }));
}

CheckReport distributivity_identity_check(const SymmetrySystem& system, const std::vector<PairSample>& samples) {
  const FlatModel& model = system.model();
  return collect(parallel_map(samples.size(), [&](std::size_t i) -> std::optional<CheckViolation> {
    const auto& [x, u0] = samples[i];
    const ModelPoint y = base_point(model, u0);
    const GroupElement sx = system.at(x).element;
    const GroupElement sy = system.at(y).element;
    const Displacement at_y = displacement(model, sy, u0);
    const Displacement at_x = displacement(model, sx, u0);
    const GroupElement sxy = system.at(act(sx, y)).element;
    const AlgElement lhs = displacement(model, sx, at_y.image).f + at_y.f;
    const AlgElement rhs = displacement(model, sxy, at_x.image).f + at_x.f;
    AlgElement residual = lhs - rhs;
    if (residual.is_zero()) return std::nullopt;
    return CheckViolation{i, x, u0, std::move(residual)};
  }));
}

AlgElement rho_transform(const Cochain1& rho, const Cochain1& nabla_upsilon, const AlgElement& upsilon,
                         const AlgElement& xi) {
  if (!upsilon.lies_in(1)) throw std::invalid_argument("rho_transform: Upsilon must lie in g_1");
  return rho(xi) + nabla_upsilon(xi) + Rat(1, 2) * bracket(upsilon, bracket(upsilon, xi));
}

InvariantGaugeResult invariant_gauge(const SymmetrySystem& system, const std::vector<Frame>& frames,
                                     const std::vector<PairSample>& pair_samples) {
  InvariantGaugeResult result{upsilon_from_system(system, frames)};
  result.report = cocycle_check(system, result.upsilon, pair_samples);
  if (!result.report.ok()) {
    result.verdict = GaugeVerdict::FiberwiseOnly;
    result.witness = result.report.violations.front();
  }
  return result;
}

}  // namespace cartan
