#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cartankit/matrix.hpp"

namespace cartan {

enum class ModelKind { Projective, Conformal };

/// Type of a |1|-graded flat model.
///
/// Projective(m): G = PGL(m+1), matrices of size m+1 split into blocks (1, m).
/// Conformal(p,q): G = PO(p+1,q+1) for the form J with anti-diagonal corner
/// entries and diag(I_p, -I_q) in the middle, blocks (1, p+q, 1).
///
/// In both cases the grade of the matrix entry (r, c) is block(c) - block(r).
class ModelTag {
 public:
  static ModelTag projective(int m);
  static ModelTag conformal(int p, int q);

  [[nodiscard]] ModelKind kind() const { return kind_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int q() const { return q_; }

  /// Matrix size n of the defining representation.
  [[nodiscard]] std::size_t matrix_size() const;
  /// dim g_{-1} = dim g_1 = dim of the model.
  [[nodiscard]] std::size_t dimension() const;
  [[nodiscard]] std::size_t block_of(std::size_t index) const;
  /// Grade of the elementary matrix E_{r,c}.
  [[nodiscard]] int entry_grade(std::size_t r, std::size_t c) const;

  /// The invariant quadratic form J (conformal only).
  [[nodiscard]] Mat quadratic_form() const;
  /// Signature sign of the middle block entry k (conformal only).
  [[nodiscard]] int signature(std::size_t k) const;

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const ModelTag&, const ModelTag&) = default;

 private:
  ModelKind kind_ = ModelKind::Projective;
  int m_ = 1;
  int p_ = 0;
  int q_ = 0;
};

}  // namespace cartan
