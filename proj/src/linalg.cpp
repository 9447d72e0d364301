#include "symplab/linalg.hpp"

#include <utility>

#include "symplab/errors.hpp"

namespace symplab {

Matrix Echelon::basis_rows() const { return rref.block(0, 0, pivots.size(), rref.cols()); }

Echelon row_reduce(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  Rational inv, f, t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    inv = 1 / m(r, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(m(r, j)) != 0) {
        m(r, j) *= inv;
        support.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      f = m(i, c);
      for (std::size_t j : support) {
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix nullspace(const Matrix& m) {
  const Echelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix basis(cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (sgn(e.rref(r, f)) != 0) basis(e.pivots[r], k) = -e.rref(r, f);
    }
  }
  return basis;
}

Matrix column_space(const Matrix& m) {
  const Echelon e = row_reduce(m);
  return m.select_columns(e.pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve", "right-hand side has wrong row count");
  const Echelon e = row_reduce(hstack(a, b));
  const std::size_t n = a.cols();
  for (auto p : e.pivots)
    if (p >= n) return std::nullopt;
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.rref(r, n + j);
  return x;
}

Rational determinant(Matrix m) {
  if (!m.is_square()) throw ShapeError("determinant", "matrix is not square");
  const std::size_t n = m.rows();
  Rational det = 1, f, t;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) {
        if (sgn(m(c, j)) == 0) continue;
        t = f * m(c, j);
        m(i, j) -= t;
      }
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("inverse", "matrix is not square");
  const Echelon e = row_reduce(hstack(m, Matrix::identity(m.rows())));
  if (e.rank() < m.rows() || (m.rows() > 0 && e.pivots.back() >= m.cols())) {
    throw PreconditionError("inverse", "matrix is singular");
  }
  return e.rref.block(0, m.cols(), m.rows(), m.rows());
}

bool column_space_contains(const Matrix& a, const Matrix& b) {
  if (b.cols() == 0) return true;
  return rank(hstack(a, b)) == rank(a);
}

std::size_t quotient_dimension(const Matrix& num, const Matrix& den) {
  if (num.rows() != den.rows()) throw ShapeError("quotient_dimension", "ambient dimensions differ");
  return rank(hstack(num, den)) - rank(den);
}

Matrix intersect_column_spaces(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("intersect_column_spaces", "ambient dimensions differ");
  const Matrix kernel = nullspace(hstack(a, -b));
  const Matrix coeffs = kernel.block(0, 0, a.cols(), kernel.cols());
  return column_space(a * coeffs);
}

}  // namespace symplab
