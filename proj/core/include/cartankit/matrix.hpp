#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartankit/rational.hpp"

namespace cartan {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_rows(std::initializer_list<std::initializer_list<Rat>> rows);
  static Mat diagonal(const std::vector<Rat>& diag);
  static Mat column(const std::vector<Rat>& v);
  static Mat unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] const std::vector<Rat>& entries() const { return data_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  [[nodiscard]] std::vector<Rat> column_vector(std::size_t c) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Rat trace() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) { return a *= Rat(-1); }
  friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Matrix times column vector.
std::vector<Rat> mat_vec(const Mat& a, const std::vector<Rat>& v);

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_inverse(const Mat& a);
/// Commutator ab - ba.
Mat commutator(const Mat& a, const Mat& b);

/// Reduced row echelon form and pivot columns. The forward sweep is
/// fraction-free (Bareiss) on an integer-scaled copy; pivots are the first
/// nonzero entry in column order.
struct Echelon {
  Mat rref;
  std::vector<std::size_t> pivots;
};
Echelon row_reduce(const Mat& a);
std::size_t rank(const Mat& a);
Rat determinant(const Mat& a);

/// Basis of {x : a x = 0}, one basis vector per column (cols = nullity).
/// Each basis vector has a 1 in its free coordinate and 0 in the others.
Mat nullspace(const Mat& a);

/// Solution set of a x = b: one particular solution (free variables set to
/// zero) plus a null-space basis of a.
struct LinearSolution {
  Mat particular;
  Mat nullspace;
};
std::optional<LinearSolution> solve_linear(const Mat& a, const Mat& b);

/// a = lower * diag * upper with respect to the (split, n - split) block
/// partition. std::nullopt means the leading block is singular (off cell).
struct BlockLdu {
  Mat lower;
  Mat diag;
  Mat upper;
};
std::optional<BlockLdu> block_ldu(const Mat& a, std::size_t split);

}  // namespace cartan
