#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cartankit/group.hpp"
#include "cartankit/matrix.hpp"
#include "cartankit/model.hpp"

namespace cartan {

/// Raised when a matrix that should lie in the algebra does not.
struct ClosureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// |1|-graded matrix Lie algebra g = g_{-1} + g_0 + g_1 with exact structure
/// constants. Basis elements are ordered by grade (-1, 0, +1) and, within a
/// grade, lexicographically by their leading elementary matrix.
class GradedAlgebra {
 public:
  using Sparse = std::vector<std::pair<std::size_t, Rat>>;

  [[nodiscard]] const ModelTag& model() const { return tag_; }
  [[nodiscard]] std::size_t matrix_size() const { return tag_.matrix_size(); }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::size_t dim_of(int grade) const;
  /// Half-open basis-index range [first, second) of grade i.
  [[nodiscard]] std::pair<std::size_t, std::size_t> grade_range(int grade) const;
  [[nodiscard]] int grade_of(std::size_t index) const { return grades_[index]; }
  [[nodiscard]] const Mat& basis(std::size_t index) const { return basis_[index]; }
  [[nodiscard]] const std::vector<Mat>& basis() const { return basis_; }

  /// Coordinates of m in the basis, or std::nullopt if m is not in g.
  [[nodiscard]] std::optional<std::vector<Rat>> try_expand(const Mat& m) const;
  /// Coordinates of m; throws ClosureFailure if m is not in g.
  [[nodiscard]] std::vector<Rat> expand(const Mat& m) const;
  [[nodiscard]] Mat assemble(const std::vector<Rat>& coords) const;

  /// Structure constants: coordinates of [b_i, b_j].
  [[nodiscard]] const Sparse& bracket_of_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }

  /// g_1-coordinates (full-length vector) of the element Z^k dual to the
  /// k-th basis element of g_{-1} under tr(Z X).
  [[nodiscard]] const std::vector<Rat>& dual_of_minus(std::size_t k) const { return dual_[k]; }

 private:
  friend AlgebraPtr build_projective_algebra(int m);
  friend AlgebraPtr build_conformal_algebra(int p, int q);
  GradedAlgebra(ModelTag tag, std::vector<Mat> basis, std::vector<int> grades);

  ModelTag tag_;
  std::vector<Mat> basis_;
  std::vector<int> grades_;
  // Expansion: coordinate i = sum over (position, coefficient) of entries.
  std::vector<std::size_t> probe_positions_;
  std::vector<Sparse> probe_inverse_;
  std::vector<Sparse> table_;
  std::vector<std::vector<Rat>> dual_;
};

/// sl(m+1) with the block grading (1, m).
AlgebraPtr build_projective_algebra(int m);
/// so(p+1, q+1) with the block grading (1, p+q, 1).
AlgebraPtr build_conformal_algebra(int p, int q);
AlgebraPtr build_algebra(const ModelTag& tag);

/// Element of a graded algebra, stored by coordinates.
class AlgElement {
 public:
  AlgElement(AlgebraPtr alg, std::vector<Rat> coords);
  static AlgElement zero(AlgebraPtr alg);
  static AlgElement basis(AlgebraPtr alg, std::size_t index);
  /// Throws ClosureFailure if m is not in the algebra.
  static AlgElement from_matrix(AlgebraPtr alg, const Mat& m);
  /// Element of grade +-1 from its coordinates inside that grade.
  static AlgElement from_grade_coords(AlgebraPtr alg, int grade, const std::vector<Rat>& coords);

  [[nodiscard]] const GradedAlgebra& algebra() const { return *alg_; }
  [[nodiscard]] const AlgebraPtr& algebra_ptr() const { return alg_; }
  [[nodiscard]] const std::vector<Rat>& coords() const { return coords_; }
  [[nodiscard]] std::vector<Rat> grade_coords(int grade) const;
  [[nodiscard]] Mat matrix() const { return alg_->assemble(coords_); }
  [[nodiscard]] bool is_zero() const;
  /// True when every nonzero coordinate has the given grade.
  [[nodiscard]] bool lies_in(int grade) const;

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const Rat& s);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator-(AlgElement a) { return a *= Rat(-1); }
  friend AlgElement operator*(const Rat& s, AlgElement a) { return a *= s; }
  friend bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.alg_ == b.alg_ && a.coords_ == b.coords_;
  }

 private:
  AlgebraPtr alg_;
  std::vector<Rat> coords_;
};

/// [a, b] through the structure constants.
AlgElement bracket(const AlgElement& a, const AlgElement& b);
/// Component of a in g_i.
AlgElement grade_project(const AlgElement& a, int grade);
/// g a g^-1 re-expanded in the basis.
AlgElement adjoint_action(const GroupElement& g, const AlgElement& a);

/// Linear map g_{-1} -> g; column j holds the coordinates of phi(X_j).
class Cochain1 {
 public:
  Cochain1(AlgebraPtr alg, Mat values, std::optional<int> target_grade = std::nullopt);
  static Cochain1 zero(AlgebraPtr alg, std::optional<int> target_grade = std::nullopt);

  [[nodiscard]] const GradedAlgebra& algebra() const { return *alg_; }
  [[nodiscard]] const AlgebraPtr& algebra_ptr() const { return alg_; }
  [[nodiscard]] const Mat& values() const { return values_; }
  [[nodiscard]] std::optional<int> target_grade() const { return target_grade_; }
  [[nodiscard]] AlgElement on_basis(std::size_t j) const;
  /// phi(xi) for xi in g_{-1}.
  [[nodiscard]] AlgElement operator()(const AlgElement& xi) const;

  friend Cochain1 operator+(const Cochain1& a, const Cochain1& b);
  friend bool operator==(const Cochain1& a, const Cochain1& b) {
    return a.alg_ == b.alg_ && a.values_ == b.values_;
  }

 private:
  AlgebraPtr alg_;
  Mat values_;
  std::optional<int> target_grade_;
};

/// Antisymmetric bilinear map g_{-1} x g_{-1} -> g, stored on basis pairs
/// i < j in lexicographic order.
class Cochain2 {
 public:
  explicit Cochain2(AlgebraPtr alg);

  [[nodiscard]] const GradedAlgebra& algebra() const { return *alg_; }
  [[nodiscard]] const AlgebraPtr& algebra_ptr() const { return alg_; }
  [[nodiscard]] std::size_t pair_count() const { return values_.size(); }
  [[nodiscard]] std::pair<std::size_t, std::size_t> pair_at(std::size_t index) const;
  [[nodiscard]] std::size_t pair_index(std::size_t i, std::size_t j) const;

  /// kappa(X_i, X_j) with antisymmetry applied; zero when i == j.
  [[nodiscard]] AlgElement value(std::size_t i, std::size_t j) const;
  /// Sets kappa(X_i, X_j) (and implicitly kappa(X_j, X_i) = -v). Requires i != j.
  void set(std::size_t i, std::size_t j, const AlgElement& v);
  [[nodiscard]] const std::vector<Rat>& stored(std::size_t pair) const { return values_[pair]; }

  [[nodiscard]] bool is_zero() const;
  friend Cochain2 operator+(const Cochain2& a, const Cochain2& b);
  friend bool operator==(const Cochain2& a, const Cochain2& b) {
    return a.alg_ == b.alg_ && a.values_ == b.values_;
  }

 private:
  AlgebraPtr alg_;
  std::size_t n_minus_ = 0;
  std::vector<std::vector<Rat>> values_;
};

struct CurvDecomp {
  Cochain2 torsion;      // values in g_{-1}
  Cochain2 weyl;         // values in g_0
  Cochain2 cotton_york;  // values in g_1
};

/// (d phi)(X, Y) = [X, phi(Y)] - [Y, phi(X)].
Cochain2 differential(const Cochain1& phi);
/// Kostant codifferential, (d* kappa)(X_k) = sum_l [Z^l, kappa(X_k, X_l)]
/// with Z^l dual to X_l under the trace pairing.
Cochain1 codifferential(const Cochain2& kappa);
bool is_normal(const Cochain2& kappa);
bool is_torsion_free(const Cochain2& kappa);
CurvDecomp decompose_curvature(const Cochain2& kappa);
Cochain2 reassemble(const CurvDecomp& parts);

}  // namespace cartan
