#include "cartankit/symmetries.hpp"

#include "cartankit/parallel.hpp"

namespace cartan {

OriginSymmetryFamily enumerate_origin_symmetries(const FlatModel& model) {
  const ModelTag& tag = model.tag();
  const std::size_t n = tag.matrix_size();
  const GradedAlgebra& alg = model.algebra();
  const auto [m0, m1] = alg.grade_range(-1);

  // Unknowns: the grade-0 (block-diagonal) entries of g0.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (tag.entry_grade(r, c) == 0) unknowns.emplace_back(r, c);

  // g0 X + X g0 = 0 for every basis X of g_{-1}: Ad_{g0} = -id there.
  Mat system((m1 - m0) * n * n, unknowns.size());
  for (std::size_t k = m0; k < m1; ++k) {
    const Mat& x = alg.basis(k);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const Mat e = Mat::unit(n, n, unknowns[u].first, unknowns[u].second);
      const Mat term = e * x + x * e;
      for (std::size_t pos = 0; pos < n * n; ++pos) system((k - m0) * n * n + pos, u) = term.entries()[pos];
    }
  }
  const Mat sol = nullspace(system);

  OriginSymmetryFamily fam;
  fam.z_dim = alg.dim_of(1);
  fam.solution_space_dim = sol.cols();
  if (sol.cols() != 1) return fam;

  Mat g0(n, n);
  for (std::size_t u = 0; u < unknowns.size(); ++u) g0(unknowns[u].first, unknowns[u].second) = sol(u, 0);
  if (determinant(g0).is_zero()) return fam;
  try {
    GroupElement candidate(tag, std::move(g0));
    for (std::size_t k = m0; k < m1; ++k) {
      const AlgElement x = AlgElement::basis(model.algebra_ptr(), k);
      if (!(adjoint_action(candidate, x) == -x)) return fam;
    }
    fam.g0_class = std::move(candidate);
  } catch (const NotInGroup&) {
  }
  return fam;
}

Symmetry make_origin_symmetry(const FlatModel& model, const std::vector<Rat>& z) {
  const auto fam = enumerate_origin_symmetries(model);
  if (!fam.g0_class) throw NoOriginSymmetry();
  return {*fam.g0_class * model.exp_plus(z), model.origin()};
}

Symmetry transport(const Symmetry& s, const GroupElement& h) {
  return {s.element.conjugate_by(h), act(h, s.center)};
}

VerificationReport verify_symmetry(const FlatModel& model, const Symmetry& s) {
  VerificationReport r;
  r.fixes_center = act(s.element, s.center) == s.center;
  const GroupElement chart = model.chart_at(s.center);
  r.differential = chart_differential(model, s.element, s.center, chart, chart);
  r.differential_is_minus_identity = r.differential == -Mat::identity(model.dimension());
  r.involutive = (s.element * s.element).is_identity();
  return r;
}

SymmetrySystem::SymmetrySystem(FlatModel model, std::variant<ConjugationRule, TableRule> rule)
    : model_(std::move(model)), rule_(std::move(rule)) {}

SymmetrySystem SymmetrySystem::conjugation(const FlatModel& model, Symmetry base, std::optional<GroupElement> frame) {
  GroupElement k = frame ? *frame : model.identity();
  SymmetrySystem sys(model, ConjugationRule{std::move(base), k});
  sys.frame_inverse_ = k.inverse();
  const auto* rule = sys.conjugation_rule();
  auto yb = model.chart_coordinates(act(*sys.frame_inverse_, rule->base.center));
  if (!yb) throw ChartViolation("conjugation rule: base center is outside the frame chart");
  sys.base_coords_ = *std::move(yb);
  return sys;
}

SymmetrySystem SymmetrySystem::table(const FlatModel& model, std::vector<Symmetry> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].center == entries[j].center)
        throw std::invalid_argument("table rule: two entries share a center");
  return SymmetrySystem(model, TableRule{std::move(entries)});
}

std::optional<std::vector<Rat>> SymmetrySystem::frame_coordinates(const ModelPoint& x) const {
  if (!frame_inverse_) return model_.chart_coordinates(x);
  return model_.chart_coordinates(act(*frame_inverse_, x));
}

ModelPoint SymmetrySystem::point_at_frame_coordinates(const std::vector<Rat>& y) const {
  const ModelPoint p = model_.point_at(y);
  if (const auto* rule = conjugation_rule()) return act(rule->frame, p);
  return p;
}

bool SymmetrySystem::covers(const ModelPoint& x) const {
  if (conjugation_rule()) return frame_coordinates(x).has_value();
  for (const auto& e : table_rule()->entries)
    if (e.center == x) return true;
  return false;
}

GroupElement SymmetrySystem::transporter(const ModelPoint& x) const {
  const auto* rule = conjugation_rule();
  if (!rule) throw NotDifferentiable("transporter: table rules have no transporter family");
  auto y = frame_coordinates(x);
  if (!y) throw UncoveredPoint("point outside the chart of the conjugation rule");
  for (std::size_t a = 0; a < y->size(); ++a) (*y)[a] -= base_coords_[a];
  return model_.exp_minus(*y).conjugate_by(rule->frame);
}

Symmetry SymmetrySystem::at(const ModelPoint& x) const {
  if (const auto* rule = conjugation_rule()) return transport(rule->base, transporter(x));
  for (const auto& e : table_rule()->entries)
    if (e.center == x) return e;
  throw UncoveredPoint("table rule has no symmetry at the requested point");
}

AxiomReport check_loos_axioms(const SymmetrySystem& system,
                              const std::vector<std::pair<ModelPoint, ModelPoint>>& samples) {
  auto results = parallel_map(samples.size(), [&](std::size_t i) -> std::optional<LoosFailure> {
    const auto& [x, y] = samples[i];
    const Symmetry sx = system.at(x);
    const Symmetry sy = system.at(y);
    const ModelPoint image = act(sx.element, y);
    const Symmetry sz = system.at(image);
    LoosFailure f{i, x, y};
    f.fixes_center = act(sx.element, x) == x;
    f.involutive_on_y = act(sx.element, image) == y;
    const GroupElement lhs = sx.element * sy.element * sx.element;
    f.composition = lhs == sz.element;
    if (f.fixes_center && f.involutive_on_y && f.composition) return std::nullopt;
    if (!f.composition) {
      f.lhs = lhs;
      f.rhs = sz.element;
    }
    return f;
  });
  AxiomReport report;
  report.pairs_checked = samples.size();
  for (auto& r : results) {
    if (!r) continue;
    report.fixes_center_failures += r->fixes_center ? 0 : 1;
    report.involution_failures += r->involutive_on_y ? 0 : 1;
    report.composition_failures += r->composition ? 0 : 1;
    report.failures.push_back(std::move(*r));
  }
  return report;
}

Mat tangent_doubling_check(const SymmetrySystem& system, const ModelPoint& x0) {
  const auto* rule = system.conjugation_rule();
  if (!rule) throw NotDifferentiable("tangent doubling needs a conjugation rule");
  const FlatModel& model = system.model();
  const auto y0 = system.frame_coordinates(x0);
  if (!y0) throw ChartViolation("tangent doubling: x0 outside the frame chart");
  const auto yb = system.frame_coordinates(rule->base.center);

  // Work in the frame chart: with s' = k^-1 s_base k and D = y - y_base,
  // f reads y -> c(exp(D) s' exp(-D) . exp(y0) o).
  const GroupElement kinv = rule->frame.inverse();
  const Mat sprime = (kinv * rule->base.element * rule->frame).matrix();
  std::vector<Rat> d0 = *y0;
  std::vector<Rat> minus_d0(d0.size());
  for (std::size_t a = 0; a < d0.size(); ++a) {
    d0[a] -= (*yb)[a];
    minus_d0[a] = -d0[a];
  }
  const Mat m = model.exp_minus(d0).matrix() * sprime * model.exp_minus(minus_d0).matrix();
  const auto v0 = model.exp_minus(*y0).matrix().column_vector(0);
  const auto w = mat_vec(m, v0);
  if (w[0].is_zero()) throw ChartViolation("tangent doubling: image at infinity of the frame chart");

  const std::size_t k = model.dimension();
  const std::size_t m0 = model.algebra().grade_range(-1).first;
  const Rat w0sq = w[0] * w[0];
  Mat jac(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    // d/dy_i of exp(D) s' exp(-D) is E_i M - M E_i since g_{-1} is abelian.
    const Mat& ei = model.algebra().basis(m0 + i);
    const auto dw = mat_vec(ei * m - m * ei, v0);
    for (std::size_t a = 0; a < k; ++a) jac(a, i) = (dw[a + 1] * w[0] - w[a + 1] * dw[0]) / w0sq;
  }
  return jac;
}

}  // namespace cartan
