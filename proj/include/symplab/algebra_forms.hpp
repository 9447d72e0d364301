#pragma once

#include <optional>
#include <vector>

#include "symplab/lie_core.hpp"

namespace symplab::forms {

using lie::AlgebraElement;
using lie::ContextPtr;
using lie::Subspace;

/// A linear functional on the algebra, stored as its values on the basis.
class AlgebraOneForm {
 public:
  AlgebraOneForm(ContextPtr ctx, Vector covector);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Vector& covector() const noexcept { return covector_; }
  Rational operator()(const AlgebraElement& x) const;

 private:
  ContextPtr ctx_;
  Vector covector_;
};

/// A 2-form on the algebra, stored as its antisymmetric Gram matrix on the
/// basis: gram(i, j) = ω(e_i, e_j).
class AlgebraTwoForm {
 public:
  /// Throws PreconditionError when `gram` is not antisymmetric.
  AlgebraTwoForm(ContextPtr ctx, Matrix gram);

  static AlgebraTwoForm zero(const ContextPtr& ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Matrix& gram() const noexcept { return gram_; }
  Rational operator()(const AlgebraElement& x, const AlgebraElement& y) const;

  friend bool operator==(const AlgebraTwoForm& a, const AlgebraTwoForm& b) {
    return a.ctx_->n() == b.ctx_->n() && a.gram_ == b.gram_;
  }

 private:
  ContextPtr ctx_;
  Matrix gram_;
};

/// ω_A restricted to a complement of its kernel.
struct QuotientForm {
  ContextPtr context;
  Subspace kernel;
  std::vector<AlgebraElement> complement;
  Matrix reduced_gram;
  Rational determinant;

  bool nondegenerate() const { return sgn(determinant) != 0; }
};

/// The invariant 2-form ω_A(x, y) = B(A, [x, y]).
AlgebraTwoForm omega_from_element(const AlgebraElement& a);

/// θ = B(a, ·).
AlgebraOneForm killing_dual(const AlgebraElement& a);

/// Chevalley–Eilenberg differential on 1-forms: dθ(x, y) = -θ([x, y]).
/// With this sign, ce_d1(killing_dual(a)) = -omega_from_element(a).
AlgebraTwoForm ce_d1(const AlgebraOneForm& theta);

/// Matrix of the differential Λ²g* → Λ³g* in the bases {e^i∧e^j, i<j} and
/// {e^i∧e^j∧e^k, i<j<k}, with
/// dω(e_i, e_j, e_k) = -ω([e_i,e_j], e_k) + ω([e_i,e_k], e_j) - ω([e_j,e_k], e_i).
Matrix ce_d2_matrix(const ContextPtr& ctx);

/// Values of dω on increasing basis triples.
Vector ce_d2(const AlgebraTwoForm& omega);

bool is_closed_2form(const AlgebraTwoForm& omega);

/// Dimension of the space of closed 2-forms (nullity of ce_d2_matrix).
std::size_t closed_two_form_dimension(const ContextPtr& ctx);

/// The unique a with omega_from_element(a) = ω. Throws PreconditionError when
/// ω is not closed.
AlgebraElement potential_element(const AlgebraTwoForm& omega);

/// {x : ω(x, ·) = 0}.
Subspace form_kernel(const AlgebraTwoForm& omega);
std::size_t form_rank(const AlgebraTwoForm& omega);

/// Restriction of ω_A to the complement spanned by the basis vectors that are
/// not pivots of the kernel's echelon basis. Requires A regular.
QuotientForm quotient_form(const AlgebraElement& a);

/// Restriction of ω to an explicitly chosen complement of its kernel. Throws
/// PreconditionError if kernel + complement does not span the algebra.
QuotientForm restrict_to_complement(const AlgebraTwoForm& omega, const std::vector<AlgebraElement>& complement);

/// Summary used by the CLI `omega` command.
struct FormReport {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  Subspace kernel;
  bool closed = false;
  std::optional<AlgebraElement> potential;
  bool potential_roundtrip = false;
};

FormReport analyze(const AlgebraTwoForm& omega);

}  // namespace symplab::forms
