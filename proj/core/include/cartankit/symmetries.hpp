#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "cartankit/flat_model.hpp"

namespace cartan {

struct NoOriginSymmetry : std::domain_error {
  NoOriginSymmetry() : std::domain_error("model has no symmetry at the origin") {}
};

struct UncoveredPoint : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct NotDifferentiable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A group element together with the point it is meant to be a symmetry at.
struct Symmetry {
  GroupElement element;
  ModelPoint center;
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// Symmetries at the origin are g0 exp(Z) for the class g0 acting by -id on
/// g_{-1} and arbitrary Z in g_1.
struct OriginSymmetryFamily {
  std::optional<GroupElement> g0_class;
  std::size_t z_dim = 0;
  /// Dimension of the linear solution space of g0 X = -X g0 over
  /// block-diagonal matrices; 1 certifies a unique class.
  std::size_t solution_space_dim = 0;
};

OriginSymmetryFamily enumerate_origin_symmetries(const FlatModel& model);
/// g0 exp(Z) at the origin; throws NoOriginSymmetry.
Symmetry make_origin_symmetry(const FlatModel& model, const std::vector<Rat>& z);
/// h s h^-1 centered at h . center.
Symmetry transport(const Symmetry& s, const GroupElement& h);

struct VerificationReport {
  bool fixes_center = false;
  bool differential_is_minus_identity = false;
  bool involutive = false;
  Mat differential;
  [[nodiscard]] bool ok() const { return fixes_center && differential_is_minus_identity && involutive; }
};

/// Checks s(x) = x, T_x s = -id (so x is an isolated fixed point) and s^2 = 1.
VerificationReport verify_symmetry(const FlatModel& model, const Symmetry& s);

/// s_x = h(x) s_base h(x)^-1 with h(x) = k exp(c(k^-1 x) - c(k^-1 x_base)) k^-1,
/// where c is the standard chart and k the translation frame (identity by
/// default, in which case h(x) = exp(X) for a base symmetry at the origin).
struct ConjugationRule {
  Symmetry base;
  GroupElement frame;
};

/// A finite point -> symmetry assignment.
struct TableRule {
  std::vector<Symmetry> entries;
};

class SymmetrySystem {
 public:
  static SymmetrySystem conjugation(const FlatModel& model, Symmetry base,
                                    std::optional<GroupElement> frame = std::nullopt);
  static SymmetrySystem table(const FlatModel& model, std::vector<Symmetry> entries);

  [[nodiscard]] const FlatModel& model() const { return model_; }
  [[nodiscard]] const ConjugationRule* conjugation_rule() const { return std::get_if<ConjugationRule>(&rule_); }
  [[nodiscard]] const TableRule* table_rule() const { return std::get_if<TableRule>(&rule_); }

  [[nodiscard]] bool covers(const ModelPoint& x) const;
  /// Symmetry at x; throws UncoveredPoint.
  [[nodiscard]] Symmetry at(const ModelPoint& x) const;
  /// Conjugation rules only: h with h . x_base = x.
  [[nodiscard]] GroupElement transporter(const ModelPoint& x) const;
  /// Chart coordinates c(k^-1 x) used by conjugation rules.
  [[nodiscard]] std::optional<std::vector<Rat>> frame_coordinates(const ModelPoint& x) const;
  /// Point with frame coordinates y, i.e. k exp(y) . origin.
  [[nodiscard]] ModelPoint point_at_frame_coordinates(const std::vector<Rat>& y) const;

 private:
  SymmetrySystem(FlatModel model, std::variant<ConjugationRule, TableRule> rule);

  FlatModel model_;
  std::variant<ConjugationRule, TableRule> rule_;
  std::optional<GroupElement> frame_inverse_;
  std::vector<Rat> base_coords_;
};

struct LoosFailure {
  std::size_t sample_index = 0;
  ModelPoint x;
  ModelPoint y;
  bool fixes_center = true;
  bool involutive_on_y = true;
  bool composition = true;
  /// s_x s_y s_x and s_{s_x(y)} when the composition law fails.
  std::optional<GroupElement> lhs;
  std::optional<GroupElement> rhs;
};

struct AxiomReport {
  std::size_t pairs_checked = 0;
  std::size_t fixes_center_failures = 0;
  std::size_t involution_failures = 0;
  std::size_t composition_failures = 0;
  std::vector<LoosFailure> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// For each (x, y): s_x(x) = x, s_x(s_x(y)) = y and s_x s_y s_x = s_{s_x(y)}
/// as equality of canonical representatives. Throws UncoveredPoint when x,
/// y or s_x(y) is not covered.
AxiomReport check_loos_axioms(const SymmetrySystem& system,
                              const std::vector<std::pair<ModelPoint, ModelPoint>>& samples);

/// Exact Jacobian at x0 of x -> s_x(x0), in the chart of the rule's frame.
/// Equals 2 I for a genuine system. Table rules throw NotDifferentiable.
Mat tangent_doubling_check(const SymmetrySystem& system, const ModelPoint& x0);

}  // namespace cartan
