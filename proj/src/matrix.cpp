#include "freedf/matrix.hpp"

#include <utility>

#include "freedf/error.hpp"

namespace freedf {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

namespace {

// Integer matrix with row scale factors s_r such that integer row r equals
// s_r times rational row r.
struct ScaledIntegerRows {
  std::size_t n = 0;
  std::vector<Integer> cells;
  std::vector<Integer> scale;
};

ScaledIntegerRows clear_denominators(const RationalMatrix& a) {
  ScaledIntegerRows out;
  out.n = a.rows();
  out.cells.resize(a.rows() * a.cols());
  out.scale.resize(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    out.scale[r] = l;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out.cells[r * a.cols() + c] = a(r, c).get_num() * (l / a(r, c).get_den());
    }
  }
  return out;
}

// Bareiss forward elimination on an n x w integer block; returns the sign of
// the row permutation, or 0 when a zero pivot column makes the leading n x n
// block singular.
int bareiss_forward(std::vector<Integer>& m, std::size_t n, std::size_t w) {
  int sign = 1;
  Integer previous = 1;
  Integer t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot * w + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < w; ++c) std::swap(m[k * w + c], m[pivot * w + c]);
      sign = -sign;
    }
    const Integer& pkk = m[k * w + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Integer& pik = m[i * w + k];
      for (std::size_t j = k + 1; j < w; ++j) {
        Integer& cell = m[i * w + j];
        const Integer& pkj = m[k * w + j];
        // cell = (pkk * cell - pik * pkj) / previous, exact
        mpz_mul(cell.get_mpz_t(), cell.get_mpz_t(), pkk.get_mpz_t());
        mpz_mul(t.get_mpz_t(), pik.get_mpz_t(), pkj.get_mpz_t());
        mpz_sub(cell.get_mpz_t(), cell.get_mpz_t(), t.get_mpz_t());
        mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), previous.get_mpz_t());
      }
      pik = 0;
    }
    previous = pkk;
  }
  return sign;
}

}  // namespace

std::optional<RationalMatrix> invert_exact(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::SizeMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return RationalMatrix();
  ScaledIntegerRows b = clear_denominators(a);
  const std::size_t w = 2 * n;
  std::vector<Integer> m(n * w);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r * w + c] = std::move(b.cells[r * n + c]);
    m[r * w + n + r] = 1;
  }
  if (bareiss_forward(m, n, w) == 0) return std::nullopt;

  // The last pivot is +-det(B); y = d * B^{-1} is integral and solves U y = d * rhs.
  const Integer d = m[(n - 1) * w + (n - 1)];
  std::vector<Integer> y(n * n);
  Integer acc;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      acc = d * m[ii * w + n + c];
      for (std::size_t j = ii + 1; j < n; ++j) {
        mpz_submul(acc.get_mpz_t(), m[ii * w + j].get_mpz_t(), y[j * n + c].get_mpz_t());
      }
      mpz_divexact(y[ii * n + c].get_mpz_t(), acc.get_mpz_t(), m[ii * w + ii].get_mpz_t());
    }
  }
  // A = S^{-1} B  =>  A^{-1} = B^{-1} S.
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Rational& cell = inv(r, c);
      cell.get_num() = y[r * n + c] * b.scale[c];
      cell.get_den() = d;
      cell.canonicalize();
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  ScaledIntegerRows b = clear_denominators(a);
  int sign = bareiss_forward(b.cells, n, n);
  if (sign == 0) return 0;
  Rational det(b.cells[(n - 1) * n + (n - 1)]);
  for (const auto& s : b.scale) det /= s;
  return sign > 0 ? det : Rational(-det);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinearSolveResult solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::SizeMismatch, "right-hand side length mismatch");
  RationalMatrix m(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    m(r, a.cols()) = b[r];
  }
  auto pivots = row_reduce(m, a.cols());
  LinearSolveResult out;
  out.rank = pivots.size();
  out.consistent = true;
  for (std::size_t r = out.rank; r < m.rows(); ++r) {
    if (m(r, a.cols()) != 0) out.consistent = false;
  }
  out.solution.assign(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) out.solution[pivots[r]] = m(r, a.cols());
  return out;
}

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return row_reduce(m, a.cols()).size();
}

}  // namespace freedf
