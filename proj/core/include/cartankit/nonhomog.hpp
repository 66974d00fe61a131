#pragma once

#include <optional>
#include <vector>

#include "cartankit/sampling.hpp"
#include "cartankit/symmetries.hpp"

namespace cartan {

/// RP^m with the two points [e_{m-1}] and [e_m] removed (0-based basis
/// e_0..e_m of R^{m+1}). The line through them is {x_0 = ... = x_{m-2} = 0}.
class PuncturedModel {
 public:
  explicit PuncturedModel(int m);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] const FlatModel& model() const { return model_; }
  [[nodiscard]] const ModelPoint& removed_first() const { return removed_[0]; }
  [[nodiscard]] const ModelPoint& removed_second() const { return removed_[1]; }

  [[nodiscard]] bool is_removed(const ModelPoint& x) const;
  [[nodiscard]] bool on_line(const ModelPoint& x) const;
  /// On the line with both line coordinates nonzero.
  [[nodiscard]] bool is_generic_line_point(const ModelPoint& x) const;

 private:
  int m_;
  FlatModel model_;
  std::vector<ModelPoint> removed_;
};

enum class AllowedMode { Preserve, Swap, No };

const char* to_string(AllowedMode mode);

/// Column-pattern inspection of the last two columns.
AllowedMode is_allowed(const GroupElement& g, const PuncturedModel& pm);

struct AllowedAutomorphism {
  GroupElement element;
  AllowedMode mode;  // Preserve or Swap
};

/// Throws std::invalid_argument when g is not allowed.
AllowedAutomorphism make_allowed(const GroupElement& g, const PuncturedModel& pm);
AllowedAutomorphism random_allowed_automorphism(const PuncturedModel& pm, Sampler& rng, AllowedMode mode);

/// Whether g . w stays on the line. Throws std::invalid_argument unless w is
/// a generic line point.
bool line_confinement_check(const AllowedAutomorphism& g, const ModelPoint& w, const PuncturedModel& pm);

/// s(W) = (1, W; 0, -E) at the origin; W has m entries.
GroupElement origin_symmetry_with_row(const PuncturedModel& pm, const std::vector<Rat>& w_row);

/// g s(W) g^-1 with g . e_0 = x and g fixing e_{m-1}, e_m. W defaults to 0;
/// its last two entries must vanish. Throws std::invalid_argument when x is
/// on the line or removed.
Symmetry off_line_symmetry(const ModelPoint& x, const PuncturedModel& pm,
                           const std::optional<std::vector<Rat>>& w_row = std::nullopt);

/// Entries of rows (m-1, m) x columns (m-1, m) of a 2x2 block.
struct LineColumns {
  Rat a, b, c, d;  // [[a, b], [c, d]]
  friend bool operator==(const LineColumns&, const LineColumns&) = default;
};

/// Closed form of the line-symmetry block as a function of the line
/// coordinates (x_m, x_{m+1}) and the W entry v:
///   [[x_m v - 1, (x_m / x_{m+1}) (2 - x_m v)], [x_{m+1} v, 1 - x_m v]].
LineColumns line_columns_closed_form(const Rat& xm, const Rat& xm1, const Rat& v);

struct LineSymmetry {
  Symmetry symmetry;
  Mat conjugator;   // e_0 -> w, e_j -> e_j (0 < j < m), e_m -> e_0
  Mat raw_product;  // conjugator * s(W) * conjugator^-1 before normalization
  Rat v;            // W entry in column m-1
  LineColumns columns;  // read from raw_product
  AllowedMode mode = AllowedMode::No;
};

/// Line symmetry with v = 1/x_m (x_m the coordinate at index m-1); other W
/// entries default to zero. Throws std::invalid_argument unless w is a
/// generic line point.
LineSymmetry line_symmetry(const ModelPoint& w, const PuncturedModel& pm,
                           const std::optional<std::vector<Rat>>& w_row = std::nullopt);
/// Same, built from a specific homogeneous representative of w (the raw
/// product depends on the representative, the symmetry does not).
LineSymmetry line_symmetry(const std::vector<Rat>& representative, const PuncturedModel& pm,
                           const std::optional<std::vector<Rat>>& w_row = std::nullopt);
Mat line_conjugator(const ModelPoint& w, const PuncturedModel& pm);
Mat line_conjugator(const std::vector<Rat>& representative, const PuncturedModel& pm);

/// Solvability of the column-pattern conditions on g s(W) g^-1, which are
/// affine in W, for the symmetry family at g . origin.
struct WElimination {
  bool preserve_solvable = false;
  bool swap_solvable = false;
  /// A W realizing Swap with both pattern entries nonzero, when one exists.
  std::optional<std::vector<Rat>> swap_witness;
  std::size_t preserve_rank = 0;  // rank of the homogeneous system
  std::size_t swap_rank = 0;
};

WElimination eliminate_symmetry_family(const Mat& conjugator, const PuncturedModel& pm);

struct ProbeReport {
  std::size_t automorphisms = 0;
  std::size_t line_pairs = 0;
  std::size_t line_escapes = 0;
  std::size_t off_line_pairs = 0;
  std::size_t off_line_images_on_line = 0;
  std::size_t distinct_off_line_images = 0;
  [[nodiscard]] bool vacuous() const { return line_pairs == 0 || off_line_pairs == 0; }
  [[nodiscard]] bool strata_separated() const { return line_escapes == 0 && off_line_images_on_line == 0; }
};

/// Finite certificate that the sampled automorphisms never connect line
/// points with off-line points.
ProbeReport homogeneity_probe(const PuncturedModel& pm, const std::vector<AllowedAutomorphism>& automorphisms,
                              const std::vector<ModelPoint>& line_points,
                              const std::vector<ModelPoint>& off_line_points);

}  // namespace cartan
