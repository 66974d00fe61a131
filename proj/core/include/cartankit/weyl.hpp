#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cartankit/graded.hpp"
#include "cartankit/symmetries.hpp"

namespace cartan {

struct OffCell : std::domain_error {
  using std::domain_error::domain_error;
};

/// Point of the G_0-bundle over the big cell: the class of exp(X) g0 modulo P_+.
struct Frame {
  AlgElement base_x;  // in g_{-1}
  GroupElement g0;    // in G_0

  [[nodiscard]] bool is_canonical() const { return g0.is_identity(); }
  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Validates grades and builds a frame; g0 defaults to the identity.
Frame make_frame(const FlatModel& model, const std::vector<Rat>& x,
                 const std::optional<GroupElement>& g0 = std::nullopt);
ModelPoint base_point(const FlatModel& model, const Frame& u);

/// Reference gauge: sigma(X, g0) = exp(X) g0 exp(Ad_{g0^-1} shift). The flat
/// gauge is shift = 0.
GroupElement gauge_section(const FlatModel& model, const Frame& u, const std::optional<AlgElement>& shift = std::nullopt);

/// s sigma(u0) = sigma(image) exp(F).
struct Displacement {
  AlgElement f;  // in g_1
  Frame image;
};

/// Throws OffCell when s sigma(u0) leaves the big cell.
Displacement displacement(const FlatModel& model, const GroupElement& s, const Frame& u0,
                          const std::optional<AlgElement>& gauge_shift = std::nullopt);

/// G_0-equivariant g_1-valued function on frames, stored on canonical frames
/// (g0 = 1) and extended by Upsilon(u g) = Ad_{g^-1} Upsilon(u). Values at
/// frames that were never stored are computed from the system on demand.
class UpsilonField {
 public:
  explicit UpsilonField(SymmetrySystem system) : system_(std::move(system)) {}

  [[nodiscard]] AlgElement operator()(const Frame& u) const;
  /// -1/2 F(p0(u), u) at the canonical frame over the point with coordinates x.
  [[nodiscard]] AlgElement compute_canonical(const std::vector<Rat>& x) const;
  void store(const std::vector<Rat>& x, AlgElement value) { stored_.insert_or_assign(x, std::move(value)); }
  [[nodiscard]] const std::map<std::vector<Rat>, AlgElement>& stored() const { return stored_; }
  [[nodiscard]] const SymmetrySystem& system() const { return system_; }

 private:
  SymmetrySystem system_;
  std::map<std::vector<Rat>, AlgElement> stored_;
};

/// Upsilon(u0) = -1/2 F(p0(u0), u0) evaluated at each given frame.
UpsilonField upsilon_from_system(const SymmetrySystem& system, const std::vector<Frame>& frames);

struct PairSample {
  ModelPoint x;
  Frame u0;
};

struct CheckViolation {
  std::size_t sample_index = 0;
  ModelPoint x;
  Frame u0;
  AlgElement residual;  // exact g_1-valued difference
};

struct CheckReport {
  std::size_t checked = 0;
  std::vector<CheckViolation> violations;
  [[nodiscard]] bool vacuous() const { return checked == 0; }
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// F(x, u0) = Upsilon(phi0(x, u0)) - Upsilon(u0) per sample.
CheckReport cocycle_check(const SymmetrySystem& system, const UpsilonField& upsilon,
                          const std::vector<PairSample>& samples);

/// With y = p0(u0):
/// F(x, phi0(y,u0)) + F(y,u0) = F(s_x(y), phi0(x,u0)) + F(x,u0).
CheckReport distributivity_identity_check(const SymmetrySystem& system, const std::vector<PairSample>& samples);

/// P(xi) + (nabla Upsilon)(xi) + 1/2 [Upsilon, [Upsilon, xi]].
AlgElement rho_transform(const Cochain1& rho, const Cochain1& nabla_upsilon, const AlgElement& upsilon,
                         const AlgElement& xi);

enum class GaugeVerdict { Invariant, FiberwiseOnly };

struct InvariantGaugeResult {
  UpsilonField upsilon;
  GaugeVerdict verdict = GaugeVerdict::Invariant;
  CheckReport report;
  std::optional<CheckViolation> witness;
  [[nodiscard]] bool vacuous() const { return report.vacuous(); }
};

/// Computes the unique candidate Upsilon and decides invariance on the samples.
InvariantGaugeResult invariant_gauge(const SymmetrySystem& system, const std::vector<Frame>& frames,
                                     const std::vector<PairSample>& pair_samples);

}  // namespace cartan
