#include "symplab/lie_core.hpp"

#include "symplab/errors.hpp"

namespace symplab::lie {

Matrix standard_j(int n) {
  const auto sz = static_cast<std::size_t>(n);
  Matrix j(2 * sz, 2 * sz);
  for (std::size_t i = 0; i < sz; ++i) {
    j(i, sz + i) = -1;
    j(sz + i, i) = 1;
  }
  return j;
}

AlgebraContext::AlgebraContext(int n) : n_(n) {
  if (n < 1) throw PreconditionError("standard_basis", "n must be at least 1");
  const auto sz = static_cast<std::size_t>(n);
  const std::size_t m = 2 * sz;
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) {
      Matrix x(m, m);
      x(i, j) = 1;
      x(sz + j, sz + i) = -1;
      basis_.push_back(std::move(x));
      labels_.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i; j < sz; ++j) {
      Matrix x(m, m);
      x(i, sz + j) = 1;
      x(j, sz + i) = 1;
      basis_.push_back(std::move(x));
      labels_.push_back("B" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i; j < sz; ++j) {
      Matrix x(m, m);
      x(sz + i, j) = 1;
      x(sz + j, i) = 1;
      basis_.push_back(std::move(x));
      labels_.push_back("C" + std::to_string(i + 1) + std::to_string(j + 1));
    }

  const std::size_t d = dim();
  structure_.assign(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Matrix comm = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      const Vector c = coordinates(comm);
      for (std::size_t k = 0; k < d; ++k) {
        structure_[(i * d + j) * d + k] = c[k];
        structure_[(j * d + i) * d + k] = -c[k];
      }
    }

  basis_ad_.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix ad(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) ad(k, j) = structure_constant(i, j, k);
    basis_ad_.push_back(std::move(ad));
  }

  killing_gram_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Rational b = (basis_ad_[i] * basis_ad_[j]).trace();
      killing_gram_(i, j) = b;
      killing_gram_(j, i) = b;
    }

  // e_0 = diag(1, 0.., -1, 0..) has trace(e_0^2) = 2.
  trace_ratio_ = killing_gram_(0, 0) / (basis_[0] * basis_[0]).trace();
}

Matrix AlgebraContext::ad_matrix(const Vector& coords) const {
  if (coords.size() != dim()) throw ShapeError("ad_matrix", "coordinate vector has wrong length");
  Matrix ad(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    ad += coords[i] * basis_ad_[i];
  }
  return ad;
}

Vector AlgebraContext::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw ShapeError("bracket", "coordinate vector has wrong length");
  const std::size_t d = dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& c = structure_constant(i, j, k);
        if (sgn(c) != 0) out[k] += xy * c;
      }
    }
  }
  return out;
}

Matrix AlgebraContext::to_matrix(const Vector& coords) const {
  if (coords.size() != dim()) throw ShapeError("to_matrix", "coordinate vector has wrong length");
  Matrix x(matrix_size(), matrix_size());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(coords[i]) != 0) x += coords[i] * basis_[i];
  return x;
}

Vector AlgebraContext::coordinates(const Matrix& x) const {
  const std::size_t m = matrix_size();
  if (x.rows() != m || x.cols() != m) {
    throw ShapeError("coordinates", "expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
  }
  const auto sz = static_cast<std::size_t>(n_);
  Vector c;
  c.reserve(dim());
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) c.push_back(x(i, j));
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i; j < sz; ++j) c.push_back(x(i, sz + j));
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i; j < sz; ++j) c.push_back(x(sz + i, j));
  if (!(to_matrix(c) == x)) throw PreconditionError("coordinates", "matrix is not in sp(2n, R)");
  return c;
}

Rational AlgebraContext::killing(const Vector& x, const Vector& y) const {
  return (ad_matrix(x) * ad_matrix(y)).trace();
}

AlgebraElement::AlgebraElement(ContextPtr ctx, Vector coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (!ctx_) throw PreconditionError("AlgebraElement", "null context");
  if (coords_.size() != ctx_->dim()) throw ShapeError("AlgebraElement", "coordinate vector has wrong length");
}

AlgebraElement AlgebraElement::zero(ContextPtr ctx) {
  const std::size_t d = ctx->dim();
  return {std::move(ctx), Vector(d)};
}

AlgebraElement AlgebraElement::basis_element(ContextPtr ctx, std::size_t i) {
  Vector v(ctx->dim());
  v.at(i) = 1;
  return {std::move(ctx), std::move(v)};
}

AlgebraElement AlgebraElement::from_matrix(ContextPtr ctx, const Matrix& x) {
  Vector c = ctx->coordinates(x);
  return {std::move(ctx), std::move(c)};
}

void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* op) {
  if (a != b && a->n() != b->n()) throw ContextMismatch(op, "elements belong to different algebras");
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_context(a.ctx_, b.ctx_, "operator+");
  Vector v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coords_[i];
  return {a.ctx_, std::move(v)};
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_context(a.ctx_, b.ctx_, "operator-");
  Vector v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coords_[i];
  return {a.ctx_, std::move(v)};
}

AlgebraElement operator*(const Rational& s, const AlgebraElement& a) {
  Vector v = a.coords_;
  for (auto& x : v) x *= s;
  return {a.ctx_, std::move(v)};
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.ctx_->n() == b.ctx_->n() && a.coords_ == b.coords_;
}

Subspace::Subspace(ContextPtr ctx, const std::vector<Vector>& spanning) : ctx_(std::move(ctx)) {
  Matrix rows(spanning.size(), ctx_->dim());
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    if (spanning[i].size() != ctx_->dim()) throw ShapeError("Subspace", "spanning vector has wrong length");
    for (std::size_t j = 0; j < ctx_->dim(); ++j) rows(i, j) = spanning[i][j];
  }
  echelon_ = row_reduce(std::move(rows)).basis_rows();
}

Subspace Subspace::from_columns(ContextPtr ctx, const Matrix& columns) {
  if (columns.rows() != ctx->dim()) throw ShapeError("Subspace::from_columns", "ambient dimension mismatch");
  Matrix e = row_reduce(columns.transpose()).basis_rows();
  return Subspace(std::move(ctx), std::move(e));
}

Subspace Subspace::whole(ContextPtr ctx) {
  const std::size_t d = ctx->dim();
  return Subspace(std::move(ctx), Matrix::identity(d));
}

std::vector<AlgebraElement> Subspace::basis() const {
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < echelon_.rows(); ++i) {
    const auto r = echelon_.row(i);
    out.emplace_back(ctx_, Vector(r.begin(), r.end()));
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ctx_->dim()) throw ShapeError("Subspace::contains", "vector has wrong length");
  Matrix m(echelon_.rows() + 1, echelon_.cols());
  m.set_block(0, 0, echelon_);
  for (std::size_t j = 0; j < v.size(); ++j) m(echelon_.rows(), j) = v[j];
  return rank(m) == echelon_.rows();
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ctx_->n() == b.ctx_->n() && a.echelon_ == b.echelon_;
}

ContextPtr standard_basis(int n) { return std::make_shared<const AlgebraContext>(n); }

namespace {
void require_square_2n(const Matrix& x, int n, const char* op) {
  if (n < 1) throw PreconditionError(op, "n must be at least 1");
  const auto m = static_cast<std::size_t>(2 * n);
  if (x.rows() != m || x.cols() != m) {
    throw ShapeError(op, "expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix, got " +
                             std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}
}  // namespace

bool is_in_algebra(const Matrix& x, int n) {
  require_square_2n(x, n, "is_in_algebra");
  const Matrix j = standard_j(n);
  return (j * x + x.transpose() * j).is_zero();
}

bool is_in_group(const Matrix& x, int n) {
  require_square_2n(x, n, "is_in_group");
  const Matrix j = standard_j(n);
  return x.transpose() * j * x == j;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_context(x.context(), y.context(), "bracket");
  return {x.context(), x.context()->bracket(x.coords(), y.coords())};
}

Rational killing_form(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_context(x.context(), y.context(), "killing_form");
  return x.context()->killing(x.coords(), y.coords());
}

Rational killing_form_gram(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_context(x.context(), y.context(), "killing_form");
  const Vector ky = x.context()->killing_gram() * std::span<const Rational>(y.coords());
  Rational b = 0;
  for (std::size_t i = 0; i < ky.size(); ++i) b += x.coords()[i] * ky[i];
  return b;
}

bool is_regular(const AlgebraElement& a) { return is_squarefree(characteristic_polynomial(a.matrix())); }

Subspace centralizer(const AlgebraElement& a) {
  return Subspace::from_columns(a.context(), nullspace(a.context()->ad_matrix(a.coords())));
}

Subspace joint_centralizer(const Subspace& s) {
  const auto& ctx = s.context();
  const std::size_t d = ctx->dim();
  Matrix stacked(0, d);
  for (const auto& v : s.basis()) stacked = vstack(stacked, ctx->ad_matrix(v.coords()));
  if (stacked.rows() == 0) return Subspace::whole(ctx);
  return Subspace::from_columns(ctx, nullspace(stacked));
}

bool is_abelian(const Subspace& s) {
  const auto b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!bracket(b[i], b[j]).is_zero()) return false;
  return true;
}

bool is_maximal_abelian(const Subspace& s) {
  if (!is_abelian(s)) throw PreconditionError("is_maximal_abelian", "subspace is not abelian");
  return joint_centralizer(s) == s;
}

SpectralReport spectral_type(const AlgebraElement& a) {
  const Polynomial p = characteristic_polynomial(a.matrix());
  std::vector<Rational> q_coeffs;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k % 2 == 1) {
      if (sgn(p.coeff(k)) != 0) throw PreconditionError("spectral_type", "characteristic polynomial is not even");
      continue;
    }
    q_coeffs.push_back(p.coeff(k));
  }
  const Polynomial q(std::move(q_coeffs));

  SpectralReport r;
  r.defective = !is_squarefree(p);
  r.zero_eigenvalue = q.sign_at(0) == 0;
  const Polynomial q_distinct = squarefree_part(q);
  const SturmSequence sturm(q_distinct);
  r.real_pairs = sturm.count_positive_roots();
  r.imaginary_pairs = sturm.count_negative_roots();
  const int zero_roots = r.zero_eigenvalue ? 1 : 0;
  r.complex_quadruples = (q_distinct.degree() - r.real_pairs - r.imaginary_pairs - zero_roots) / 2;

  if (r.defective) r.label = "parabolic/defective";
  else if (r.imaginary_pairs == a.context()->n()) r.label = "elliptic";
  else if (r.real_pairs == a.context()->n()) r.label = "hyperbolic";
  else r.label = "mixed";
  return r;
}

AlgebraElement random_element(const ContextPtr& ctx, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Vector v(ctx->dim());
  for (auto& x : v) x = dist(rng);
  return {ctx, std::move(v)};
}

AlgebraElement random_regular_element(const ContextPtr& ctx, std::mt19937_64& rng, int bound) {
  for (;;) {
    AlgebraElement a = random_element(ctx, rng, bound);
    if (is_regular(a)) return a;
  }
}

}  // namespace symplab::lie
