#include "cartankit/model.hpp"

#include <stdexcept>

namespace cartan {

ModelTag ModelTag::projective(int m) {
  if (m < 1) throw std::invalid_argument("projective model needs m >= 1");
  ModelTag t;
  t.kind_ = ModelKind::Projective;
  t.m_ = m;
  return t;
}

ModelTag ModelTag::conformal(int p, int q) {
  if (p < 0 || q < 0 || p + q < 3) throw std::invalid_argument("conformal model needs p, q >= 0 and p + q >= 3");
  ModelTag t;
  t.kind_ = ModelKind::Conformal;
  t.p_ = p;
  t.q_ = q;
  t.m_ = p + q;
  return t;
}

std::size_t ModelTag::matrix_size() const {
  return kind_ == ModelKind::Projective ? static_cast<std::size_t>(m_) + 1 : static_cast<std::size_t>(m_) + 2;
}

std::size_t ModelTag::dimension() const { return static_cast<std::size_t>(m_); }

std::size_t ModelTag::block_of(std::size_t index) const {
  if (index == 0) return 0;
  if (kind_ == ModelKind::Conformal && index == matrix_size() - 1) return 2;
  return 1;
}

int ModelTag::entry_grade(std::size_t r, std::size_t c) const {
  return static_cast<int>(block_of(c)) - static_cast<int>(block_of(r));
}

int ModelTag::signature(std::size_t k) const { return static_cast<int>(k) < p_ ? 1 : -1; }

Mat ModelTag::quadratic_form() const {
  if (kind_ != ModelKind::Conformal) throw std::logic_error("quadratic_form: projective model has none");
  const std::size_t n = matrix_size();
  Mat j(n, n);
  j(0, n - 1) = 1;
  j(n - 1, 0) = 1;
  for (std::size_t k = 0; k < dimension(); ++k) j(k + 1, k + 1) = signature(k);
  return j;
}

std::string ModelTag::describe() const {
  if (kind_ == ModelKind::Projective) return "projective(m=" + std::to_string(m_) + ")";
  return "conformal(p=" + std::to_string(p_) + ",q=" + std::to_string(q_) + ")";
}

}  // namespace cartan
