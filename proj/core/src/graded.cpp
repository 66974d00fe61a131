#include "cartankit/graded.hpp"

#include <string>

namespace cartan {

GradedAlgebra::GradedAlgebra(ModelTag tag, std::vector<Mat> basis, std::vector<int> grades)
    : tag_(tag), basis_(std::move(basis)), grades_(std::move(grades)) {
  const std::size_t d = basis_.size();
  const std::size_t n = tag_.matrix_size();

  // Choose d matrix positions on which the basis is independent; coordinates
  // are then read off by a d x d inverse.
  Mat stacked(d, n * n);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t pos = 0; pos < n * n; ++pos) stacked(b, pos) = basis_[b].entries()[pos];
  const Echelon e = row_reduce(stacked);
  if (e.pivots.size() != d) throw ClosureFailure("graded algebra basis is linearly dependent");
  probe_positions_ = e.pivots;
  Mat sub(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t b = 0; b < d; ++b) sub(k, b) = basis_[b].entries()[probe_positions_[k]];
  const Mat inv = mat_inverse(sub);
  probe_inverse_.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (!inv(i, k).is_zero()) probe_inverse_[i].emplace_back(k, inv(i, k));

  table_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto c = expand(commutator(basis_[i], basis_[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) table_[i * d + j].emplace_back(k, c[k]);
    }
  }

  const auto [m0, m1] = grade_range(-1);
  const auto [p0, p1] = grade_range(1);
  const std::size_t k = m1 - m0;
  if (p1 - p0 != k) throw ClosureFailure("dim g_1 differs from dim g_-1");
  Mat pairing(k, k);  // pairing(l, a) = tr(Z_a X_l)
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t a = 0; a < k; ++a) pairing(l, a) = (basis_[p0 + a] * basis_[m0 + l]).trace();
  const Mat pinv = mat_inverse(pairing);
  dual_.assign(k, std::vector<Rat>(d));
  for (std::size_t kk = 0; kk < k; ++kk)
    for (std::size_t a = 0; a < k; ++a) dual_[kk][p0 + a] = pinv(a, kk);
}

std::size_t GradedAlgebra::dim_of(int grade) const {
  const auto [a, b] = grade_range(grade);
  return b - a;
}

std::pair<std::size_t, std::size_t> GradedAlgebra::grade_range(int grade) const {
  std::size_t first = 0;
  while (first < grades_.size() && grades_[first] < grade) ++first;
  std::size_t last = first;
  while (last < grades_.size() && grades_[last] == grade) ++last;
  return {first, last};
}

std::optional<std::vector<Rat>> GradedAlgebra::try_expand(const Mat& m) const {
  const std::size_t n = matrix_size();
  if (m.rows() != n || m.cols() != n) return std::nullopt;
  const std::size_t d = dim();
  std::vector<Rat> c(d);
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [k, v] : probe_inverse_[i]) {
      const Rat& entry = m.entries()[probe_positions_[k]];
      if (!entry.is_zero()) c[i] += v * entry;
    }
  if (!(assemble(c) == m)) return std::nullopt;
  return c;
}

std::vector<Rat> GradedAlgebra::expand(const Mat& m) const {
  auto c = try_expand(m);
  if (!c) throw ClosureFailure("matrix does not lie in " + tag_.describe() + " algebra");
  return *std::move(c);
}

Mat GradedAlgebra::assemble(const std::vector<Rat>& coords) const {
  const std::size_t n = matrix_size();
  Mat m(n, n);
  for (std::size_t b = 0; b < coords.size(); ++b) {
    if (coords[b].is_zero()) continue;
    const auto& src = basis_[b].entries();
    for (std::size_t pos = 0; pos < n * n; ++pos)
      if (!src[pos].is_zero()) m(pos / n, pos % n) += coords[b] * src[pos];
  }
  return m;
}

AlgebraPtr build_projective_algebra(int m) {
  const ModelTag tag = ModelTag::projective(m);
  const std::size_t n = tag.matrix_size();
  std::vector<Mat> basis;
  std::vector<int> grades;
  for (std::size_t i = 1; i < n; ++i) {
    basis.push_back(Mat::unit(n, n, i, 0));
    grades.push_back(-1);
  }
  // g_0: block-diagonal (-tr A, A), basis E_ij - delta_ij E_00.
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      Mat b = Mat::unit(n, n, i, j);
      if (i == j) b(0, 0) = -1;
      basis.push_back(std::move(b));
      grades.push_back(0);
    }
  for (std::size_t j = 1; j < n; ++j) {
    basis.push_back(Mat::unit(n, n, 0, j));
    grades.push_back(1);
  }
  return AlgebraPtr(new GradedAlgebra(tag, std::move(basis), std::move(grades)));
}

AlgebraPtr build_conformal_algebra(int p, int q) {
  const ModelTag tag = ModelTag::conformal(p, q);
  const std::size_t n = tag.matrix_size();
  const std::size_t k = tag.dimension();
  const std::size_t last = n - 1;
  std::vector<Mat> basis;
  std::vector<int> grades;
  for (std::size_t a = 0; a < k; ++a) {
    Mat x = Mat::unit(n, n, a + 1, 0);
    x(last, a + 1) = -tag.signature(a);
    basis.push_back(std::move(x));
    grades.push_back(-1);
  }
  Mat h = Mat::unit(n, n, 0, 0);
  h(last, last) = -1;
  basis.push_back(std::move(h));
  grades.push_back(0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Mat r = Mat::unit(n, n, a + 1, b + 1);
      r(b + 1, a + 1) = -tag.signature(a) * tag.signature(b);
      basis.push_back(std::move(r));
      grades.push_back(0);
    }
  for (std::size_t a = 0; a < k; ++a) {
    Mat z = Mat::unit(n, n, 0, a + 1);
    z(a + 1, last) = -tag.signature(a);
    basis.push_back(std::move(z));
    grades.push_back(1);
  }
  return AlgebraPtr(new GradedAlgebra(tag, std::move(basis), std::move(grades)));
}

AlgebraPtr build_algebra(const ModelTag& tag) {
  return tag.kind() == ModelKind::Projective ? build_projective_algebra(tag.m())
                                             : build_conformal_algebra(tag.p(), tag.q());
}

// --- AlgElement -----------------------------------------------------------

AlgElement::AlgElement(AlgebraPtr alg, std::vector<Rat> coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (coords_.size() != alg_->dim()) throw DimensionMismatch("AlgElement: coordinate count mismatch");
}

AlgElement AlgElement::zero(AlgebraPtr alg) {
  const std::size_t d = alg->dim();
  return AlgElement(std::move(alg), std::vector<Rat>(d));
}

AlgElement AlgElement::basis(AlgebraPtr alg, std::size_t index) {
  std::vector<Rat> c(alg->dim());
  c.at(index) = 1;
  return AlgElement(std::move(alg), std::move(c));
}

AlgElement AlgElement::from_matrix(AlgebraPtr alg, const Mat& m) {
  auto c = alg->expand(m);
  return AlgElement(std::move(alg), std::move(c));
}

AlgElement AlgElement::from_grade_coords(AlgebraPtr alg, int grade, const std::vector<Rat>& coords) {
  const auto [a, b] = alg->grade_range(grade);
  if (coords.size() != b - a)
    throw DimensionMismatch("grade " + std::to_string(grade) + " expects " + std::to_string(b - a) + " coordinates");
  std::vector<Rat> c(alg->dim());
  for (std::size_t i = 0; i < coords.size(); ++i) c[a + i] = coords[i];
  return AlgElement(std::move(alg), std::move(c));
}

std::vector<Rat> AlgElement::grade_coords(int grade) const {
  const auto [a, b] = alg_->grade_range(grade);
  return {coords_.begin() + static_cast<std::ptrdiff_t>(a), coords_.begin() + static_cast<std::ptrdiff_t>(b)};
}

bool AlgElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool AlgElement::lies_in(int grade) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coords_[i].is_zero() && alg_->grade_of(i) != grade) return false;
  return true;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  if (alg_ != o.alg_) throw DimensionMismatch("AlgElement: different algebras");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  if (alg_ != o.alg_) throw DimensionMismatch("AlgElement: different algebras");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

AlgElement& AlgElement::operator*=(const Rat& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

AlgElement bracket(const AlgElement& a, const AlgElement& b) {
  if (a.algebra_ptr() != b.algebra_ptr()) throw DimensionMismatch("bracket: different algebras");
  const GradedAlgebra& g = a.algebra();
  std::vector<Rat> out(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (a.coords()[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (b.coords()[j].is_zero()) continue;
      const Rat w = a.coords()[i] * b.coords()[j];
      for (const auto& [k, c] : g.bracket_of_basis(i, j)) out[k] += w * c;
    }
  }
  return AlgElement(a.algebra_ptr(), std::move(out));
}

AlgElement grade_project(const AlgElement& a, int grade) {
  std::vector<Rat> c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (a.algebra().grade_of(i) != grade) c[i] = 0;
  return AlgElement(a.algebra_ptr(), std::move(c));
}

AlgElement adjoint_action(const GroupElement& g, const AlgElement& a) {
  if (!(g.model() == a.algebra().model())) throw DimensionMismatch("adjoint_action: model mismatch");
  const Mat& r = g.matrix();
  return AlgElement::from_matrix(a.algebra_ptr(), r * a.matrix() * mat_inverse(r));
}

}  // namespace cartan
