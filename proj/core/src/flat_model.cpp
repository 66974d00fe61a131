#include "cartankit/flat_model.hpp"

#include <string>

namespace cartan {

namespace {

std::vector<Rat> column0(const Mat& m) { return m.column_vector(0); }

}  // namespace

ModelPoint::ModelPoint(const ModelTag& tag, std::vector<Rat> homogeneous) : tag_(tag), coords_(std::move(homogeneous)) {
  if (coords_.size() != tag_.matrix_size())
    throw DimensionMismatch("ModelPoint: expected " + std::to_string(tag_.matrix_size()) + " homogeneous coordinates");
  std::size_t lead = 0;
  while (lead < coords_.size() && coords_[lead].is_zero()) ++lead;
  if (lead == coords_.size()) throw std::invalid_argument("ModelPoint: zero vector is not a point");
  if (!coords_[lead].is_one()) {
    const Rat s = coords_[lead].inverse();
    for (auto& c : coords_) c *= s;
  }
  if (tag_.kind() == ModelKind::Conformal) {
    const auto jv = mat_vec(tag_.quadratic_form(), coords_);
    Rat norm;
    for (std::size_t i = 0; i < coords_.size(); ++i) norm += coords_[i] * jv[i];
    if (!norm.is_zero()) throw std::invalid_argument("ModelPoint: conformal point must be a null vector");
  }
}

FlatModel::FlatModel(const ModelTag& tag) : tag_(tag), alg_(build_algebra(tag)) {}

ModelPoint FlatModel::origin() const {
  std::vector<Rat> v(tag_.matrix_size());
  v[0] = 1;
  return ModelPoint(tag_, std::move(v));
}

GroupElement FlatModel::exp_nilpotent(const AlgElement& a) const {
  if (!a.lies_in(-1) && !a.lies_in(1)) throw std::invalid_argument("exp_nilpotent: element must lie in g_-1 or g_1");
  const Mat m = a.matrix();
  return GroupElement(tag_, Mat::identity(tag_.matrix_size()) + m + m * m * Rat(1, 2));
}

AlgElement FlatModel::minus_element(const std::vector<Rat>& x) const {
  return AlgElement::from_grade_coords(alg_, -1, x);
}

AlgElement FlatModel::plus_element(const std::vector<Rat>& z) const {
  return AlgElement::from_grade_coords(alg_, 1, z);
}

GroupElement FlatModel::exp_minus(const std::vector<Rat>& x) const { return exp_nilpotent(minus_element(x)); }

GroupElement FlatModel::exp_plus(const std::vector<Rat>& z) const { return exp_nilpotent(plus_element(z)); }

bool FlatModel::in_g0(const GroupElement& g) const {
  const Mat& r = g.matrix();
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (!r(i, j).is_zero() && tag_.entry_grade(i, j) != 0) return false;
  return true;
}

bool FlatModel::in_parabolic(const GroupElement& g) const {
  const Mat& r = g.matrix();
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (!r(i, j).is_zero() && tag_.entry_grade(i, j) < 0) return false;
  return true;
}

std::optional<std::vector<Rat>> FlatModel::chart_coordinates(const ModelPoint& x) const {
  const auto& v = x.coords();
  if (v[0].is_zero()) return std::nullopt;
  std::vector<Rat> y(dimension());
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = v[k + 1] / v[0];
  return y;
}

ModelPoint FlatModel::point_at(const std::vector<Rat>& x) const {
  return ModelPoint(tag_, column0(exp_minus(x).matrix()));
}

GroupElement FlatModel::chart_at(const ModelPoint& x) const {
  const auto& v = x.coords();
  if (!v[0].is_zero()) return identity();
  const std::size_t n = tag_.matrix_size();
  if (tag_.kind() == ModelKind::Projective) {
    std::size_t c = 1;
    while (v[c].is_zero()) ++c;
    Mat perm = Mat::identity(n);
    perm(0, 0) = 0;
    perm(c, c) = 0;
    perm(0, c) = 1;
    perm(c, 0) = 1;
    return GroupElement(tag_, std::move(perm));
  }
  if (!v[n - 1].is_zero()) {
    Mat swap = Mat::identity(n);
    swap(0, 0) = 0;
    swap(n - 1, n - 1) = 0;
    swap(0, n - 1) = 1;
    swap(n - 1, 0) = 1;
    return GroupElement(tag_, std::move(swap));
  }
  // Null vector inside the middle block: exp(Z) with Z dual to a nonzero
  // middle coordinate brings it into the standard chart.
  std::size_t a = 0;
  while (v[a + 1].is_zero()) ++a;
  std::vector<Rat> z(dimension());
  z[a] = 1;
  return exp_plus(z);
}

ModelPoint act(const GroupElement& g, const ModelPoint& x) {
  if (!(g.model() == x.model())) throw DimensionMismatch("act: model mismatch");
  return ModelPoint(x.model(), mat_vec(g.matrix(), x.coords()));
}

std::optional<BigCellFactors> big_cell_decompose(const FlatModel& model, const GroupElement& g) {
  const ModelTag& tag = model.tag();
  const std::size_t k = tag.dimension();
  if (tag.kind() == ModelKind::Projective) {
    auto ldu = block_ldu(g.matrix(), 1);
    if (!ldu) return std::nullopt;
    std::vector<Rat> x(k);
    std::vector<Rat> z(k);
    for (std::size_t a = 0; a < k; ++a) {
      x[a] = ldu->lower(a + 1, 0);
      z[a] = ldu->upper(0, a + 1);
    }
    return BigCellFactors{model.minus_element(x), GroupElement(tag, std::move(ldu->diag)), model.plus_element(z)};
  }

  const Mat& r = g.matrix();
  if (r(0, 0).is_zero()) return std::nullopt;
  std::vector<Rat> x(k);
  for (std::size_t a = 0; a < k; ++a) x[a] = r(a + 1, 0) / r(0, 0);
  const GroupElement ex = model.exp_minus(x);
  const Mat p = mat_inverse(ex.matrix()) * r;
  Mat g0 = p;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (tag.entry_grade(i, j) != 0) g0(i, j) = 0;
  const Mat unipotent = mat_inverse(g0) * p;
  std::vector<Rat> z(k);
  for (std::size_t a = 0; a < k; ++a) z[a] = unipotent(0, a + 1);
  BigCellFactors f{model.minus_element(x), GroupElement(tag, std::move(g0)), model.plus_element(z)};
  if (!(model.exp_plus(z).matrix() == canonical_projective_representative(unipotent)))
    throw std::logic_error("big_cell_decompose: parabolic part is not G_0 exp(g_1)");
  return f;
}

std::optional<std::vector<Rat>> standard_chart_map(const FlatModel& model, const GroupElement& g,
                                                   const std::vector<Rat>& y) {
  const auto w = mat_vec(g.matrix(), column0(model.exp_minus(y).matrix()));
  if (w[0].is_zero()) return std::nullopt;
  std::vector<Rat> u(model.dimension());
  for (std::size_t a = 0; a < u.size(); ++a) u[a] = w[a + 1] / w[0];
  return u;
}

Mat standard_chart_jacobian(const FlatModel& model, const GroupElement& g, const std::vector<Rat>& y) {
  const std::size_t k = model.dimension();
  const AlgebraPtr& alg = model.algebra_ptr();
  const std::size_t m0 = alg->grade_range(-1).first;
  const Mat ymat = model.minus_element(y).matrix();
  const Mat& gm = g.matrix();
  const auto w = mat_vec(gm, column0(model.exp_minus(y).matrix()));
  if (w[0].is_zero()) throw ChartViolation("image lies at infinity of the target chart");
  const Rat w0sq = w[0] * w[0];
  Mat jac(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    // d/dt exp(Y + t E_i) e_0 at t = 0, the series stopping at degree two.
    const Mat& ei = alg->basis(m0 + i);
    const Mat dexp = ei + (ei * ymat + ymat * ei) * Rat(1, 2);
    const auto dw = mat_vec(gm, column0(dexp));
    for (std::size_t a = 0; a < k; ++a) jac(a, i) = (dw[a + 1] * w[0] - w[a + 1] * dw[0]) / w0sq;
  }
  return jac;
}

Mat chart_differential(const FlatModel& model, const GroupElement& g, const ModelPoint& x,
                       const std::optional<GroupElement>& chart_in, const std::optional<GroupElement>& chart_out) {
  const GroupElement tin = chart_in ? *chart_in : model.chart_at(x);
  const auto y = model.chart_coordinates(act(tin.inverse(), x));
  if (!y) throw ChartViolation("point lies at infinity of the source chart");
  const GroupElement tout = chart_out ? *chart_out : model.chart_at(act(g, x));
  return standard_chart_jacobian(model, tout.inverse() * g * tin, *y);
}

}  // namespace cartan
