#include "cartankit/graded.hpp"

namespace cartan {

Cochain1::Cochain1(AlgebraPtr alg, Mat values, std::optional<int> target_grade)
    : alg_(std::move(alg)), values_(std::move(values)), target_grade_(target_grade) {
  if (values_.rows() != alg_->dim() || values_.cols() != alg_->dim_of(-1))
    throw DimensionMismatch("Cochain1: values must be dim(g) x dim(g_-1)");
  if (target_grade_) {
    for (std::size_t r = 0; r < values_.rows(); ++r)
      for (std::size_t c = 0; c < values_.cols(); ++c)
        if (!values_(r, c).is_zero() && alg_->grade_of(r) != *target_grade_)
          throw DimensionMismatch("Cochain1: value outside the declared target grade");
  }
}

Cochain1 Cochain1::zero(AlgebraPtr alg, std::optional<int> target_grade) {
  Mat v(alg->dim(), alg->dim_of(-1));
  return Cochain1(std::move(alg), std::move(v), target_grade);
}

AlgElement Cochain1::on_basis(std::size_t j) const { return AlgElement(alg_, values_.column_vector(j)); }

AlgElement Cochain1::operator()(const AlgElement& xi) const {
  if (!xi.lies_in(-1)) throw DimensionMismatch("Cochain1: argument must lie in g_-1");
  return AlgElement(alg_, mat_vec(values_, xi.grade_coords(-1)));
}

Cochain1 operator+(const Cochain1& a, const Cochain1& b) {
  if (a.alg_ != b.alg_) throw DimensionMismatch("Cochain1: different algebras");
  const auto grade = a.target_grade_ == b.target_grade_ ? a.target_grade_ : std::nullopt;
  return Cochain1(a.alg_, a.values_ + b.values_, grade);
}

Cochain2::Cochain2(AlgebraPtr alg) : alg_(std::move(alg)), n_minus_(alg_->dim_of(-1)) {
  values_.assign(n_minus_ * (n_minus_ - 1) / 2, std::vector<Rat>(alg_->dim()));
}

std::size_t Cochain2::pair_index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n_minus_) throw DimensionMismatch("Cochain2: pair index needs i < j < dim g_-1");
  // Pairs (0,1),(0,2),...,(0,k-1),(1,2),...
  return i * n_minus_ - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> Cochain2::pair_at(std::size_t index) const {
  for (std::size_t i = 0; i < n_minus_; ++i) {
    const std::size_t row = n_minus_ - i - 1;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  throw DimensionMismatch("Cochain2: pair index out of range");
}

AlgElement Cochain2::value(std::size_t i, std::size_t j) const {
  if (i == j) return AlgElement::zero(alg_);
  if (i < j) return AlgElement(alg_, values_[pair_index(i, j)]);
  return -AlgElement(alg_, values_[pair_index(j, i)]);
}

void Cochain2::set(std::size_t i, std::size_t j, const AlgElement& v) {
  if (i == j) throw DimensionMismatch("Cochain2: diagonal values are fixed at zero");
  if (v.algebra_ptr() != alg_) throw DimensionMismatch("Cochain2: value from a different algebra");
  if (i < j)
    values_[pair_index(i, j)] = v.coords();
  else
    values_[pair_index(j, i)] = (-v).coords();
}

bool Cochain2::is_zero() const {
  for (const auto& v : values_)
    for (const auto& c : v)
      if (!c.is_zero()) return false;
  return true;
}

Cochain2 operator+(const Cochain2& a, const Cochain2& b) {
  if (a.alg_ != b.alg_) throw DimensionMismatch("Cochain2: different algebras");
  Cochain2 s = a;
  for (std::size_t p = 0; p < s.values_.size(); ++p)
    for (std::size_t k = 0; k < s.values_[p].size(); ++k) s.values_[p][k] += b.values_[p][k];
  return s;
}

Cochain2 differential(const Cochain1& phi) {
  const AlgebraPtr& alg = phi.algebra_ptr();
  const auto [m0, m1] = alg->grade_range(-1);
  Cochain2 out(alg);
  for (std::size_t i = 0; i + m0 < m1; ++i) {
    const AlgElement xi = AlgElement::basis(alg, m0 + i);
    for (std::size_t j = i + 1; j + m0 < m1; ++j) {
      const AlgElement xj = AlgElement::basis(alg, m0 + j);
      out.set(i, j, bracket(xi, phi.on_basis(j)) - bracket(xj, phi.on_basis(i)));
    }
  }
  return out;
}

Cochain1 codifferential(const Cochain2& kappa) {
  const AlgebraPtr& alg = kappa.algebra_ptr();
  const std::size_t k = alg->dim_of(-1);
  Mat values(alg->dim(), k);
  for (std::size_t a = 0; a < k; ++a) {
    AlgElement acc = AlgElement::zero(alg);
    for (std::size_t l = 0; l < k; ++l) {
      if (l == a) continue;
      acc += bracket(AlgElement(alg, alg->dual_of_minus(l)), kappa.value(a, l));
    }
    for (std::size_t r = 0; r < alg->dim(); ++r) values(r, a) = acc.coords()[r];
  }
  return Cochain1(alg, std::move(values));
}

bool is_normal(const Cochain2& kappa) { return codifferential(kappa).values().is_zero(); }

bool is_torsion_free(const Cochain2& kappa) {
  const auto [a, b] = kappa.algebra().grade_range(-1);
  for (std::size_t p = 0; p < kappa.pair_count(); ++p)
    for (std::size_t i = a; i < b; ++i)
      if (!kappa.stored(p)[i].is_zero()) return false;
  return true;
}

CurvDecomp decompose_curvature(const Cochain2& kappa) {
  const AlgebraPtr& alg = kappa.algebra_ptr();
  CurvDecomp parts{Cochain2(alg), Cochain2(alg), Cochain2(alg)};
  for (std::size_t p = 0; p < kappa.pair_count(); ++p) {
    const auto [i, j] = kappa.pair_at(p);
    const AlgElement v = kappa.value(i, j);
    parts.torsion.set(i, j, grade_project(v, -1));
    parts.weyl.set(i, j, grade_project(v, 0));
    parts.cotton_york.set(i, j, grade_project(v, 1));
  }
  return parts;
}

Cochain2 reassemble(const CurvDecomp& parts) { return parts.torsion + parts.weyl + parts.cotton_york; }

}  // namespace cartan
