#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "symplab/rational.hpp"

namespace symplab {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals. Products skip zero entries, so
/// the sparse operators of the model complexes stay cheap.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Single column built from a vector.
  static Matrix column_vector(std::span<const Rational> v);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  std::size_t nonzeros() const;

  Matrix select_columns(std::span<const std::size_t> idx) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Rational s, Matrix a);
Vector operator*(const Matrix& a, std::span<const Rational> v);

/// [a | b]; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
/// Kronecker product a ⊗ b.
Matrix kron(const Matrix& a, const Matrix& b);

bool is_zero_vector(std::span<const Rational> v);

std::string to_string(const Matrix& m);

}  // namespace symplab
