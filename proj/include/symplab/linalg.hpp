#pragma once

#include <optional>
#include <vector>

#include "symplab/matrix.hpp"

namespace symplab {

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
  /// The nonzero rows of the rref as a (rank x cols) matrix.
  Matrix basis_rows() const;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one basis vector per column. The basis is the
/// standard one read off the rref: a 1 in a free column, zeros in the others.
Matrix nullspace(const Matrix& m);

/// A basis of the column space, made of a subset of the original columns.
Matrix column_space(const Matrix& m);

/// Some X with a X = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Rational determinant(Matrix m);

/// Throws PreconditionError when m is singular.
Matrix inverse(const Matrix& m);

/// Whether every column of b lies in the column space of a.
bool column_space_contains(const Matrix& a, const Matrix& b);

/// dim(span(num) + span(den)) - dim span(den): dimension of the image of
/// span(num) in the quotient by span(den).
std::size_t quotient_dimension(const Matrix& num, const Matrix& den);

/// Basis of span(a) ∩ span(b) for column-spanned subspaces of the same space.
Matrix intersect_column_spaces(const Matrix& a, const Matrix& b);

}  // namespace symplab
