#pragma once

#include <iosfwd>
#include <stdexcept>

#include "cartankit/matrix.hpp"
#include "cartankit/model.hpp"

namespace cartan {

struct NotInGroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Element of the model group G: an invertible matrix modulo nonzero scalars.
///
/// The stored representative is canonical: its first nonzero entry in a
/// column-major scan is +1. Two elements are equal iff their canonical
/// representatives are. Conformal elements preserve J up to a scalar.
class GroupElement {
 public:
  /// Validates and canonicalizes. Throws NotInGroup for singular matrices,
  /// wrong sizes, or (conformal) matrices not preserving J up to scale.
  GroupElement(const ModelTag& tag, Mat representative);

  static GroupElement identity(const ModelTag& tag);

  [[nodiscard]] const Mat& matrix() const { return rep_; }
  [[nodiscard]] const ModelTag& model() const { return tag_; }
  [[nodiscard]] bool is_identity() const { return rep_.is_identity(); }

  [[nodiscard]] GroupElement inverse() const;
  [[nodiscard]] GroupElement conjugate_by(const GroupElement& h) const;  // h * this * h^-1

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.tag_ == b.tag_ && a.rep_ == b.rep_;
  }

 private:
  struct Trusted {};
  GroupElement(Trusted, const ModelTag& tag, Mat representative);

  ModelTag tag_;
  Mat rep_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

/// Scales m so its first nonzero entry (column-major) is 1.
Mat canonical_projective_representative(Mat m);

}  // namespace cartan
