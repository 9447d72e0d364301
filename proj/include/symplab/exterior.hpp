#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symplab/matrix.hpp"

namespace symplab::model {

using Mask = std::uint32_t;

/// Exterior algebra on m generators e_0, ..., e_{m-1}. Degree-k basis
/// monomials are the k-subsets, stored as bit masks in increasing order.
class ExteriorAlgebra {
 public:
  explicit ExteriorAlgebra(int generators);

  int generators() const noexcept { return m_; }
  const std::vector<Mask>& basis(int k) const { return basis_.at(static_cast<std::size_t>(k)); }
  std::size_t dim(int k) const { return (k < 0 || k > m_) ? 0 : basis(k).size(); }
  std::size_t index(Mask mask) const { return index_.at(mask); }
  Mask full_mask() const noexcept { return (Mask{1} << m_) - 1; }

  /// Sign of e_a ∧ e_b relative to the sorted monomial e_{a|b}; 0 if they overlap.
  static int wedge_sign(Mask a, Mask b);

  /// Wedge product of a degree-ka and a degree-kb form given in monomial
  /// coordinates.
  Vector wedge(int ka, const Vector& a, int kb, const Vector& b) const;

  std::string label(Mask mask, const std::vector<std::string>& names) const;

 private:
  int m_;
  std::vector<std::vector<Mask>> basis_;
  std::vector<std::size_t> index_;
};

/// Pairing of k-forms induced by a pairing of 1-forms: determinant of the
/// k x k matrix of pairwise values on decomposable monomials.
Matrix induced_pairing(const ExteriorAlgebra& ext, const Matrix& one_form_pairing, int k);

/// Standard symplectic form ω₀ = Σ e_{2i} ∧ e_{2i+1} on 2n generators
/// (generator order x1, y1, ..., xn, yn), as a degree-2 coordinate vector.
Vector standard_symplectic_form(const ExteriorAlgebra& ext);

/// Matrix of ω₀ on the dual vectors, Ω(a, b) = ω₀(∂_a, ∂_b).
Matrix standard_symplectic_matrix(int n);

/// Star operator from degree k to degree 2n - k, solving
/// α ∧ ⋆β = G(α, β) vol for every basis α, where G is the pairing induced by
/// Ω⁻¹ and vol = ω₀ⁿ / n! = e_0 ∧ ... ∧ e_{2n-1}.
Matrix symplectic_star(const ExteriorAlgebra& ext, int k);

}  // namespace symplab::model
