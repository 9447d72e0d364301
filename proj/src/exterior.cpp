#include "symplab/exterior.hpp"

#include <bit>

#include "symplab/errors.hpp"
#include "symplab/linalg.hpp"

namespace symplab::model {

ExteriorAlgebra::ExteriorAlgebra(int generators) : m_(generators) {
  if (generators < 0 || generators > 16) throw PreconditionError("ExteriorAlgebra", "unsupported generator count");
  basis_.resize(static_cast<std::size_t>(m_) + 1);
  index_.assign(std::size_t{1} << m_, 0);
  for (Mask mask = 0; mask <= full_mask(); ++mask) {
    auto& b = basis_[static_cast<std::size_t>(std::popcount(mask))];
    index_[mask] = b.size();
    b.push_back(mask);
    if (mask == full_mask()) break;
  }
}

int ExteriorAlgebra::wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Mask rest = a; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    // generators of b below i must move past e_i
    inversions += std::popcount(b & ((Mask{1} << i) - 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Vector ExteriorAlgebra::wedge(int ka, const Vector& a, int kb, const Vector& b) const {
  if (a.size() != dim(ka) || b.size() != dim(kb)) throw ShapeError("ExteriorAlgebra::wedge", "coordinate length mismatch");
  Vector out(dim(ka + kb));
  if (ka + kb > m_) return out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      const Mask ma = basis(ka)[i], mb = basis(kb)[j];
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out[index(ma | mb)] += s * a[i] * b[j];
    }
  }
  return out;
}

std::string ExteriorAlgebra::label(Mask mask, const std::vector<std::string>& names) const {
  if (mask == 0) return "1";
  std::string s;
  for (Mask rest = mask; rest; rest &= rest - 1) {
    if (!s.empty()) s += "^";
    s += names.at(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return s;
}

Matrix induced_pairing(const ExteriorAlgebra& ext, const Matrix& one_form_pairing, int k) {
  const auto& b = ext.basis(k);
  Matrix g(b.size(), b.size());
  std::vector<std::size_t> ia, ib;
  for (std::size_t p = 0; p < b.size(); ++p) {
    ia.clear();
    for (Mask r = b[p]; r; r &= r - 1) ia.push_back(static_cast<std::size_t>(std::countr_zero(r)));
    for (std::size_t q = 0; q < b.size(); ++q) {
      ib.clear();
      for (Mask r = b[q]; r; r &= r - 1) ib.push_back(static_cast<std::size_t>(std::countr_zero(r)));
      if (k == 0) {
        g(p, q) = 1;
        continue;
      }
      g(p, q) = determinant(one_form_pairing.select_rows(ia).select_columns(ib));
    }
  }
  return g;
}

Vector standard_symplectic_form(const ExteriorAlgebra& ext) {
  Vector w(ext.dim(2));
  for (int i = 0; 2 * i + 1 < ext.generators(); ++i) {
    w[ext.index((Mask{1} << (2 * i)) | (Mask{1} << (2 * i + 1)))] = 1;
  }
  return w;
}

Matrix standard_symplectic_matrix(int n) {
  const auto m = static_cast<std::size_t>(2 * n);
  Matrix omega(m, m);
  for (std::size_t i = 0; i < m; i += 2) {
    omega(i, i + 1) = 1;
    omega(i + 1, i) = -1;
  }
  return omega;
}

Matrix symplectic_star(const ExteriorAlgebra& ext, int k) {
  const int m = ext.generators();
  if (m % 2 != 0) throw PreconditionError("symplectic_star", "odd number of generators");
  if (k < 0 || k > m) throw DegreeError("symplectic_star", "degree out of range");
  const Matrix pairing = inverse(standard_symplectic_matrix(m / 2));
  const Matrix g = induced_pairing(ext, pairing, k);
  // w(α, γ): coefficient of vol in α ∧ γ
  const auto& src = ext.basis(k);
  const auto& dst = ext.basis(m - k);
  Matrix w(src.size(), dst.size());
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t c = 0; c < dst.size(); ++c)
      if ((src[a] | dst[c]) == ext.full_mask()) w(a, c) = ExteriorAlgebra::wedge_sign(src[a], dst[c]);
  const auto star = solve(w, g);
  if (!star) throw PreconditionError("symplectic_star", "defining identity has no solution");
  return *star;
}

}  // namespace symplab::model
