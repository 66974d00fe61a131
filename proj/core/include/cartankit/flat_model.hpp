#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cartankit/graded.hpp"
#include "cartankit/group.hpp"

namespace cartan {

struct ChartViolation : std::domain_error {
  using std::domain_error::domain_error;
};

/// Point of G/P: a nonzero vector modulo scale, first nonzero coordinate 1.
/// Conformal points are additionally null for J.
class ModelPoint {
 public:
  ModelPoint(const ModelTag& tag, std::vector<Rat> homogeneous);

  [[nodiscard]] const std::vector<Rat>& coords() const { return coords_; }
  [[nodiscard]] const ModelTag& model() const { return tag_; }
  friend bool operator==(const ModelPoint&, const ModelPoint&) = default;
  friend auto operator<=>(const ModelPoint& a, const ModelPoint& b) { return a.coords_ <=> b.coords_; }

 private:
  ModelTag tag_;
  std::vector<Rat> coords_;
};

/// exp(X) g0 exp(Z) factorization of an element over the big cell.
struct BigCellFactors {
  AlgElement x;      // in g_{-1}
  GroupElement g0;   // grade-preserving, canonical representative
  AlgElement z;      // in g_1
};

/// The homogeneous model G/P of a given type, with its graded algebra.
class FlatModel {
 public:
  explicit FlatModel(const ModelTag& tag);
  static FlatModel projective(int m) { return FlatModel(ModelTag::projective(m)); }
  static FlatModel conformal(int p, int q) { return FlatModel(ModelTag::conformal(p, q)); }

  [[nodiscard]] const ModelTag& tag() const { return tag_; }
  [[nodiscard]] const GradedAlgebra& algebra() const { return *alg_; }
  [[nodiscard]] const AlgebraPtr& algebra_ptr() const { return alg_; }
  [[nodiscard]] std::size_t dimension() const { return tag_.dimension(); }

  [[nodiscard]] ModelPoint origin() const;
  [[nodiscard]] GroupElement identity() const { return GroupElement::identity(tag_); }
  [[nodiscard]] GroupElement element(Mat m) const { return GroupElement(tag_, std::move(m)); }
  [[nodiscard]] ModelPoint point(std::vector<Rat> homogeneous) const { return ModelPoint(tag_, std::move(homogeneous)); }

  /// exp of an element of g_{-1} or g_1 (the series stops at the square).
  [[nodiscard]] GroupElement exp_nilpotent(const AlgElement& a) const;
  [[nodiscard]] GroupElement exp_minus(const std::vector<Rat>& x) const;
  [[nodiscard]] GroupElement exp_plus(const std::vector<Rat>& z) const;
  [[nodiscard]] AlgElement minus_element(const std::vector<Rat>& x) const;
  [[nodiscard]] AlgElement plus_element(const std::vector<Rat>& z) const;

  /// Whether g preserves the grading (lies in G_0).
  [[nodiscard]] bool in_g0(const GroupElement& g) const;
  /// Whether g fixes the origin (lies in P).
  [[nodiscard]] bool in_parabolic(const GroupElement& g) const;

  /// Affine coordinates in the standard chart at the origin, or nullopt off cell.
  [[nodiscard]] std::optional<std::vector<Rat>> chart_coordinates(const ModelPoint& x) const;
  /// exp(X) . origin for the g_{-1} element with coordinates x.
  [[nodiscard]] ModelPoint point_at(const std::vector<Rat>& x) const;

  /// A group translate T of the standard chart containing x; chart
  /// coordinates of y are then the standard coordinates of T^-1 y.
  [[nodiscard]] GroupElement chart_at(const ModelPoint& x) const;

 private:
  ModelTag tag_;
  AlgebraPtr alg_;
};

ModelPoint act(const GroupElement& g, const ModelPoint& x);

/// std::nullopt when g . origin is outside the standard chart.
std::optional<BigCellFactors> big_cell_decompose(const FlatModel& model, const GroupElement& g);

/// Exact Jacobian at x of y -> g y, with x read in the chart translated by
/// chart_in and g x read in the chart translated by chart_out. Both default
/// to FlatModel::chart_at. Throws ChartViolation when a point is at infinity
/// of its chart.
Mat chart_differential(const FlatModel& model, const GroupElement& g, const ModelPoint& x,
                       const std::optional<GroupElement>& chart_in = std::nullopt,
                       const std::optional<GroupElement>& chart_out = std::nullopt);

/// Jacobian of g at the standard-chart point y (both sides standard chart).
Mat standard_chart_jacobian(const FlatModel& model, const GroupElement& g, const std::vector<Rat>& y);

/// Image of the standard-chart point y under g, in the standard chart.
std::optional<std::vector<Rat>> standard_chart_map(const FlatModel& model, const GroupElement& g,
                                                   const std::vector<Rat>& y);

}  // namespace cartan
