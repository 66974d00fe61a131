#include "cartankit/matrix.hpp"

#include <ostream>
#include <utility>

namespace cartan {

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionMismatch("Mat: entry count " + std::to_string(data_.size()) +
                            " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Rat> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("Mat::from_rows: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Mat(r, c, std::move(data));
}

Mat Mat::diagonal(const std::vector<Rat>& diag) {
  Mat m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Mat Mat::column(const std::vector<Rat>& v) { return Mat(v.size(), 1, v); }

Mat Mat::unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  Mat m(rows, cols);
  m(r, c) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("Mat::block: out of range");
  Mat b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionMismatch("Mat::set_block: out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

std::vector<Rat> Mat::column_vector(std::size_t c) const {
  std::vector<Rat> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != Rat(r == c ? 1 : 0)) return false;
  return true;
}

Rat Mat::trace() const {
  if (!is_square()) throw DimensionMismatch("Mat::trace: non-square");
  Rat t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Mat::+: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Mat::-: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Mat p(a.rows_, b.cols_);
  mpq_class acc;
  mpq_class term;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(r, k).raw();
        if (sgn(x) == 0) continue;
        const auto& y = b(k, c).raw();
        if (sgn(y) == 0) continue;
        term = x * y;
        acc += term;
      }
      p(r, c) = Rat(acc);
    }
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

std::vector<Rat> mat_vec(const Mat& a, const std::vector<Rat>& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("apply: vector length mismatch");
  std::vector<Rat> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

namespace {

struct IntegerEchelon {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivots;
  std::vector<mpz_class> row_scale;  // row i of the input was multiplied by row_scale[i]
  int swap_sign = 1;
};

// Forward fraction-free elimination. Every entry after step k is a
// (k+1)-minor of the scaled input, so the division by the previous pivot is
// exact (Sylvester's identity).
IntegerEchelon bareiss(const Mat& a) {
  IntegerEchelon e;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  e.rows.assign(nr, std::vector<mpz_class>(nc));
  e.row_scale.assign(nr, 1);
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < nc; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
    e.row_scale[r] = l;
    for (std::size_t c = 0; c < nc; ++c) e.rows[r][c] = a(r, c).raw().get_num() * (l / a(r, c).raw().get_den());
  }
  mpz_class prev = 1;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < nc && pr < nr; ++col) {
    std::size_t sel = pr;
    while (sel < nr && e.rows[sel][col] == 0) ++sel;
    if (sel == nr) continue;
    if (sel != pr) {
      std::swap(e.rows[sel], e.rows[pr]);
      std::swap(e.row_scale[sel], e.row_scale[pr]);
      e.swap_sign = -e.swap_sign;
    }
    const mpz_class piv = e.rows[pr][col];
    for (std::size_t r = pr + 1; r < nr; ++r) {
      const mpz_class lead = e.rows[r][col];
      for (std::size_t c = col; c < nc; ++c) {
        mpz_class v = piv * e.rows[r][c] - lead * e.rows[pr][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        e.rows[r][c] = std::move(v);
      }
    }
    prev = piv;
    e.pivots.push_back(col);
    ++pr;
  }
  return e;
}

}  // namespace

Echelon row_reduce(const Mat& a) {
  IntegerEchelon ie = bareiss(a);
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  Mat rref(nr, nc);
  for (std::size_t r = 0; r < ie.pivots.size(); ++r) {
    const mpz_class& piv = ie.rows[r][ie.pivots[r]];
    for (std::size_t c = 0; c < nc; ++c)
      if (ie.rows[r][c] != 0) rref(r, c) = Rat(mpq_class(ie.rows[r][c], piv));
  }
  // Back substitution clears entries above each pivot.
  for (std::size_t k = ie.pivots.size(); k-- > 0;) {
    const std::size_t pc = ie.pivots[k];
    for (std::size_t r = 0; r < k; ++r) {
      const Rat f = rref(r, pc);
      if (f.is_zero()) continue;
      for (std::size_t c = pc; c < nc; ++c)
        if (!rref(k, c).is_zero()) rref(r, c) -= f * rref(k, c);
    }
  }
  return {std::move(rref), std::move(ie.pivots)};
}

std::size_t rank(const Mat& a) { return bareiss(a).pivots.size(); }

Rat determinant(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant: non-square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerEchelon ie = bareiss(a);
  if (ie.pivots.size() < n) return 0;
  mpz_class scale = 1;
  for (const auto& s : ie.row_scale) scale *= s;
  return Rat(mpq_class(ie.rows[n - 1][n - 1] * ie.swap_sign, scale));
}

Mat mat_inverse(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("mat_inverse: non-square");
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Mat::identity(n));
  Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix();
  return e.rref.block(0, n, n, n);
}

Mat nullspace(const Mat& a) {
  Echelon e = row_reduce(a);
  const std::size_t nc = a.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < nc; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(nc, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.rref(r, f);
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: row count mismatch");
  const std::size_t n = a.cols();
  Mat aug(a.rows(), n + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  Echelon e = row_reduce(aug);
  for (auto p : e.pivots)
    if (p >= n) return std::nullopt;
  Mat particular(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) particular(e.pivots[r], c) = e.rref(r, n + c);
  return LinearSolution{std::move(particular), nullspace(a)};
}

std::optional<BlockLdu> block_ldu(const Mat& a, std::size_t split) {
  if (!a.is_square()) throw DimensionMismatch("block_ldu: non-square");
  const std::size_t n = a.rows();
  if (split > n) throw DimensionMismatch("block_ldu: split exceeds size");
  const std::size_t rest = n - split;
  const Mat a11 = a.block(0, 0, split, split);
  if (split > 0 && determinant(a11).is_zero()) return std::nullopt;
  const Mat a11_inv = split > 0 ? mat_inverse(a11) : Mat();
  const Mat a12 = a.block(0, split, split, rest);
  const Mat a21 = a.block(split, 0, rest, split);
  const Mat a22 = a.block(split, split, rest, rest);

  BlockLdu f{Mat::identity(n), Mat(n, n), Mat::identity(n)};
  if (split == 0 || rest == 0) {
    f.diag = a;
    return f;
  }
  const Mat l21 = a21 * a11_inv;
  const Mat u12 = a11_inv * a12;
  f.lower.set_block(split, 0, l21);
  f.upper.set_block(0, split, u12);
  f.diag.set_block(0, 0, a11);
  f.diag.set_block(split, split, a22 - l21 * a12);
  return f;
}

}  // namespace cartan
