#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "symplab/linalg.hpp"
#include "symplab/polynomial.hpp"

namespace symplab::lie {

/// The standard symplectic matrix [[0, -I], [I, 0]] of size 2n.
Matrix standard_j(int n);

/// Basis of sp(2n, R) in block form [[A, B], [C, -A^t]] with B and C
/// symmetric, together with its structure constants and Killing Gram
/// matrix. Immutable once built.
///
/// Basis order: the n^2 A-block units E_ij (row-major), then the symmetric
/// B-block generators for i <= j, then the symmetric C-block generators.
class AlgebraContext {
 public:
  explicit AlgebraContext(int n);

  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t matrix_size() const noexcept { return static_cast<std::size_t>(2 * n_); }

  const std::vector<Matrix>& basis() const noexcept { return basis_; }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  const Matrix& killing_gram() const noexcept { return killing_gram_; }

  /// c with [e_i, e_j] = sum_k c(i, j, k) e_k.
  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim() + j) * dim() + k];
  }
  /// ad(e_i) in the basis: column j holds the coordinates of [e_i, e_j].
  const Matrix& basis_ad(std::size_t i) const { return basis_ad_[i]; }

  /// ad(x) assembled from structure constants.
  Matrix ad_matrix(const Vector& coords) const;
  /// Coordinates of [x, y] from structure constants.
  Vector bracket(const Vector& x, const Vector& y) const;

  Matrix to_matrix(const Vector& coords) const;
  /// Coordinates of a 2n x 2n matrix; throws ShapeError on a wrong shape and
  /// PreconditionError when the matrix is not in the algebra.
  Vector coordinates(const Matrix& x) const;

  /// Killing form as the trace of ad(x) ad(y).
  Rational killing(const Vector& x, const Vector& y) const;

  /// The constant c with B(X, Y) = c * trace(XY) on this algebra.
  const Rational& killing_trace_ratio() const noexcept { return trace_ratio_; }

 private:
  int n_;
  std::vector<Matrix> basis_;
  std::vector<std::string> labels_;
  std::vector<Rational> structure_;
  std::vector<Matrix> basis_ad_;
  Matrix killing_gram_;
  Rational trace_ratio_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

class AlgebraElement {
 public:
  AlgebraElement(ContextPtr ctx, Vector coords);

  static AlgebraElement zero(ContextPtr ctx);
  static AlgebraElement basis_element(ContextPtr ctx, std::size_t i);
  static AlgebraElement from_matrix(ContextPtr ctx, const Matrix& x);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Vector& coords() const noexcept { return coords_; }
  Matrix matrix() const { return ctx_->to_matrix(coords_); }
  bool is_zero() const { return is_zero_vector(coords_); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Rational& s, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  ContextPtr ctx_;
  Vector coords_;
};

/// A linear subspace of the algebra, stored as the nonzero rows of a reduced
/// echelon form so that equal subspaces compare equal.
class Subspace {
 public:
  Subspace(ContextPtr ctx, const std::vector<Vector>& spanning);
  /// Columns of `columns` span the subspace.
  static Subspace from_columns(ContextPtr ctx, const Matrix& columns);
  static Subspace whole(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t dim() const noexcept { return echelon_.rows(); }
  /// Echelonized basis, one vector per row.
  const Matrix& echelon_basis() const noexcept { return echelon_; }
  std::vector<AlgebraElement> basis() const;
  bool contains(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Subspace(ContextPtr ctx, Matrix echelon) : ctx_(std::move(ctx)), echelon_(std::move(echelon)) {}
  ContextPtr ctx_;
  Matrix echelon_;
};

struct SpectralReport {
  int real_pairs = 0;
  int imaginary_pairs = 0;
  int complex_quadruples = 0;
  bool zero_eigenvalue = false;
  /// Set when the element is not regular.
  bool defective = false;
  /// "elliptic", "hyperbolic", "mixed" or "parabolic/defective".
  std::string label;
};

/// Builds the context for sp(2n, R); n >= 1.
ContextPtr standard_basis(int n);

bool is_in_algebra(const Matrix& x, int n);
bool is_in_group(const Matrix& x, int n);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
Rational killing_form(const AlgebraElement& x, const AlgebraElement& y);
/// B(x, y) evaluated as x^t K y with the precomputed Killing Gram matrix.
Rational killing_form_gram(const AlgebraElement& x, const AlgebraElement& y);

/// True iff the characteristic polynomial is squarefree, i.e. the matrix has
/// 2n distinct complex eigenvalues.
bool is_regular(const AlgebraElement& a);

Subspace centralizer(const AlgebraElement& a);
/// Common centralizer of all spanning vectors of s.
Subspace joint_centralizer(const Subspace& s);
bool is_abelian(const Subspace& s);
/// Throws PreconditionError on non-abelian input.
bool is_maximal_abelian(const Subspace& s);

/// Eigenvalue families of a symplectic element. The characteristic
/// polynomial is even, p(t) = q(t^2); real pairs, imaginary pairs and
/// complex quadruples are the positive, negative and non-real roots of q,
/// counted exactly with a Sturm sequence.
SpectralReport spectral_type(const AlgebraElement& a);

/// Integer coordinates uniform in [-9, 9] in the block parametrization.
AlgebraElement random_element(const ContextPtr& ctx, std::mt19937_64& rng, int bound = 9);
/// Redraws random_element until it is regular.
AlgebraElement random_regular_element(const ContextPtr& ctx, std::mt19937_64& rng, int bound = 9);

void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* op);

}  // namespace symplab::lie
