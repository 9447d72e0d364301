#include "symplab/algebra_forms.hpp"

#include "symplab/errors.hpp"

namespace symplab::forms {

AlgebraOneForm::AlgebraOneForm(ContextPtr ctx, Vector covector) : ctx_(std::move(ctx)), covector_(std::move(covector)) {
  if (covector_.size() != ctx_->dim()) throw ShapeError("AlgebraOneForm", "covector has wrong length");
}

Rational AlgebraOneForm::operator()(const AlgebraElement& x) const {
  lie::require_same_context(ctx_, x.context(), "AlgebraOneForm");
  Rational v = 0;
  for (std::size_t i = 0; i < covector_.size(); ++i) v += covector_[i] * x.coords()[i];
  return v;
}

AlgebraTwoForm::AlgebraTwoForm(ContextPtr ctx, Matrix gram) : ctx_(std::move(ctx)), gram_(std::move(gram)) {
  if (gram_.rows() != ctx_->dim() || gram_.cols() != ctx_->dim()) {
    throw ShapeError("AlgebraTwoForm", "Gram matrix must be dim x dim");
  }
  if (!gram_.is_antisymmetric()) throw PreconditionError("AlgebraTwoForm", "Gram matrix is not antisymmetric");
}

AlgebraTwoForm AlgebraTwoForm::zero(const ContextPtr& ctx) { return {ctx, Matrix(ctx->dim(), ctx->dim())}; }

Rational AlgebraTwoForm::operator()(const AlgebraElement& x, const AlgebraElement& y) const {
  lie::require_same_context(ctx_, x.context(), "AlgebraTwoForm");
  lie::require_same_context(ctx_, y.context(), "AlgebraTwoForm");
  const Vector gy = gram_ * std::span<const Rational>(y.coords());
  Rational v = 0;
  for (std::size_t i = 0; i < gy.size(); ++i) v += x.coords()[i] * gy[i];
  return v;
}

namespace {

// gram(i, j) = -θ([e_i, e_j]) from structure constants.
Matrix gram_of_minus_theta_bracket(const ContextPtr& ctx, const Vector& theta) {
  const std::size_t d = ctx->dim();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Rational v = 0;
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& c = ctx->structure_constant(i, j, k);
        if (sgn(c) != 0) v += c * theta[k];
      }
      g(i, j) = -v;
      g(j, i) = v;
    }
  return g;
}

}  // namespace

AlgebraOneForm killing_dual(const AlgebraElement& a) {
  const auto& ctx = a.context();
  return {ctx, ctx->killing_gram() * std::span<const Rational>(a.coords())};
}

AlgebraTwoForm omega_from_element(const AlgebraElement& a) {
  // B(A, [e_i, e_j]) = sum_k c_ij^k B(A, e_k) = θ([e_i, e_j]) with θ = B(A, ·)
  const AlgebraOneForm theta = killing_dual(a);
  return {a.context(), -gram_of_minus_theta_bracket(a.context(), theta.covector())};
}

AlgebraTwoForm ce_d1(const AlgebraOneForm& theta) {
  return {theta.context(), gram_of_minus_theta_bracket(theta.context(), theta.covector())};
}

Matrix ce_d2_matrix(const ContextPtr& ctx) {
  const std::size_t d = ctx->dim();
  // index of the pair (i < j) in Λ²
  std::vector<std::size_t> pair_index(d * d, 0);
  std::size_t np = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pair_index[i * d + j] = np++;
  std::size_t nt = d * (d - 1) * (d - 2) / 6;
  Matrix m(nt, np);

  // ω(u, e_c) for u = Σ_k c_ab^k e_k contributes c_ab^k ω(e_k, e_c); ω(e_k, e_c)
  // is +pair (k < c), -pair (k > c), 0 on the diagonal.
  auto add = [&](std::size_t row, const Rational& sign, std::size_t a, std::size_t b, std::size_t c) {
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& s = ctx->structure_constant(a, b, k);
      if (sgn(s) == 0 || k == c) continue;
      if (k < c) m(row, pair_index[k * d + c]) += sign * s;
      else m(row, pair_index[c * d + k]) -= sign * s;
    }
  };

  std::size_t row = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k, ++row) {
        add(row, Rational(-1), i, j, k);
        add(row, Rational(1), i, k, j);
        add(row, Rational(-1), j, k, i);
      }
  return m;
}

Vector ce_d2(const AlgebraTwoForm& omega) {
  const auto& ctx = omega.context();
  const std::size_t d = ctx->dim();
  const Matrix& g = omega.gram();
  // ω([e_a, e_b], e_c)
  auto w = [&](std::size_t a, std::size_t b, std::size_t c) {
    Rational v = 0;
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& s = ctx->structure_constant(a, b, k);
      if (sgn(s) != 0) v += s * g(k, c);
    }
    return v;
  };
  Vector out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) out.push_back(-w(i, j, k) + w(i, k, j) - w(j, k, i));
  return out;
}

bool is_closed_2form(const AlgebraTwoForm& omega) { return is_zero_vector(ce_d2(omega)); }

std::size_t closed_two_form_dimension(const ContextPtr& ctx) {
  const Matrix m = ce_d2_matrix(ctx);
  return m.cols() - rank(m);
}

AlgebraElement potential_element(const AlgebraTwoForm& omega) {
  if (!is_closed_2form(omega)) throw PreconditionError("potential_element", "2-form is not closed");
  const auto& ctx = omega.context();
  const std::size_t d = ctx->dim();
  // Solve gram(i, j) = θ([e_i, e_j]) = Σ_k c_ij^k θ_k over all pairs i < j.
  const std::size_t np = d * (d - 1) / 2;
  Matrix system(np, d);
  Matrix rhs(np, 1);
  std::size_t row = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j, ++row) {
      for (std::size_t k = 0; k < d; ++k) system(row, k) = ctx->structure_constant(i, j, k);
      rhs(row, 0) = omega.gram()(i, j);
    }
  const auto theta = solve(system, rhs);
  if (!theta) throw PreconditionError("potential_element", "no potential exists for this 2-form");
  const auto a = solve(ctx->killing_gram(), *theta);
  if (!a) throw PreconditionError("potential_element", "Killing form is degenerate");
  AlgebraElement out(ctx, a->column(0));
  if (!(omega_from_element(out) == omega)) {
    throw PreconditionError("potential_element", "potential does not reproduce the 2-form");
  }
  return out;
}

Subspace form_kernel(const AlgebraTwoForm& omega) {
  return Subspace::from_columns(omega.context(), nullspace(omega.gram()));
}

std::size_t form_rank(const AlgebraTwoForm& omega) { return rank(omega.gram()); }

namespace {

QuotientForm restrict_gram(const AlgebraTwoForm& omega, Subspace kernel, std::vector<AlgebraElement> complement) {
  const auto& ctx = omega.context();
  Matrix c(ctx->dim(), complement.size());
  for (std::size_t j = 0; j < complement.size(); ++j)
    for (std::size_t i = 0; i < ctx->dim(); ++i) c(i, j) = complement[j].coords()[i];
  Matrix reduced = c.transpose() * omega.gram() * c;
  Rational det = determinant(reduced);
  return {ctx, std::move(kernel), std::move(complement), std::move(reduced), std::move(det)};
}

}  // namespace

QuotientForm quotient_form(const AlgebraElement& a) {
  if (!lie::is_regular(a)) throw PreconditionError("quotient_form", "element is not regular");
  const auto& ctx = a.context();
  const AlgebraTwoForm omega = omega_from_element(a);
  Subspace kernel = form_kernel(omega);
  std::vector<bool> pivot(ctx->dim(), false);
  const Matrix& e = kernel.echelon_basis();
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = 0; c < e.cols(); ++c)
      if (sgn(e(r, c)) != 0) {
        pivot[c] = true;
        break;
      }
  std::vector<AlgebraElement> complement;
  for (std::size_t j = 0; j < ctx->dim(); ++j)
    if (!pivot[j]) complement.push_back(AlgebraElement::basis_element(ctx, j));
  return restrict_gram(omega, std::move(kernel), std::move(complement));
}

QuotientForm restrict_to_complement(const AlgebraTwoForm& omega, const std::vector<AlgebraElement>& complement) {
  const auto& ctx = omega.context();
  Subspace kernel = form_kernel(omega);
  std::vector<Vector> all;
  for (const auto& v : kernel.basis()) all.push_back(v.coords());
  for (const auto& v : complement) {
    lie::require_same_context(ctx, v.context(), "restrict_to_complement");
    all.push_back(v.coords());
  }
  if (all.size() != ctx->dim() || Subspace(ctx, all).dim() != ctx->dim()) {
    throw PreconditionError("restrict_to_complement", "kernel and complement do not form a basis");
  }
  return restrict_gram(omega, std::move(kernel), complement);
}

FormReport analyze(const AlgebraTwoForm& omega) {
  FormReport r{0, 0, form_kernel(omega), false, std::nullopt, false};
  r.rank = form_rank(omega);
  r.kernel_dim = r.kernel.dim();
  r.closed = is_closed_2form(omega);
  if (r.closed) {
    r.potential = potential_element(omega);
    r.potential_roundtrip = omega_from_element(*r.potential) == omega;
  }
  return r;
}

}  // namespace symplab::forms
