#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "freedf/rational.hpp"

namespace freedf {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact inverse by fraction-free (Bareiss) elimination: rows are cleared of
/// denominators, the integer system is reduced with exact divisions, and the
/// result is read off as adj/det. Returns nullopt iff the matrix is singular,
/// decided by an exactly zero pivot.
std::optional<RationalMatrix> invert_exact(const RationalMatrix& a);

/// Exact determinant through the same elimination.
Rational determinant(const RationalMatrix& a);

/// Result of solving A x = b exactly for a possibly rank-deficient A.
struct LinearSolveResult {
  bool consistent = false;
  std::size_t rank = 0;
  /// A particular solution with every free variable set to zero.
  std::vector<Rational> solution;
};

LinearSolveResult solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

std::size_t rank(const RationalMatrix& a);

}  // namespace freedf
