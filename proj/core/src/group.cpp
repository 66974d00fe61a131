#include "cartankit/group.hpp"

#include <ostream>
#include <utility>

namespace cartan {

Mat canonical_projective_representative(Mat m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      if (!m(r, c).is_one()) m *= m(r, c).inverse();
      return m;
    }
  }
  return m;
}

namespace {

bool preserves_form_up_to_scale(const Mat& g, const Mat& j) {
  const Mat t = g.transpose() * j * g;
  // J has a 1 in the top-right corner, so the scale is t(0, n-1).
  const std::size_t n = j.rows();
  const Rat scale = t(0, n - 1);
  if (scale.is_zero()) return false;
  return t == j * scale;
}

}  // namespace

GroupElement::GroupElement(const ModelTag& tag, Mat representative) : tag_(tag) {
  const std::size_t n = tag.matrix_size();
  if (representative.rows() != n || representative.cols() != n)
    throw NotInGroup("group element has wrong size for " + tag.describe());
  if (determinant(representative).is_zero()) throw NotInGroup("group element is singular");
  if (tag.kind() == ModelKind::Conformal && !preserves_form_up_to_scale(representative, tag.quadratic_form()))
    throw NotInGroup("matrix does not preserve the conformal quadratic form up to scale");
  rep_ = canonical_projective_representative(std::move(representative));
}

GroupElement::GroupElement(Trusted, const ModelTag& tag, Mat representative)
    : tag_(tag), rep_(canonical_projective_representative(std::move(representative))) {}

GroupElement GroupElement::identity(const ModelTag& tag) {
  return GroupElement(Trusted{}, tag, Mat::identity(tag.matrix_size()));
}

GroupElement GroupElement::inverse() const { return GroupElement(Trusted{}, tag_, mat_inverse(rep_)); }

GroupElement GroupElement::conjugate_by(const GroupElement& h) const { return h * *this * h.inverse(); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (!(a.tag_ == b.tag_)) throw NotInGroup("product of elements from different models");
  return GroupElement(GroupElement::Trusted{}, a.tag_, a.rep_ * b.rep_);
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << g.matrix(); }

}  // namespace cartan
