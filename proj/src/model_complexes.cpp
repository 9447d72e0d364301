#include "symplab/model_complexes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "symplab/errors.hpp"

namespace symplab::model {

GradedOperator::GradedOperator(Kind kind, int shift_or_top, std::vector<Matrix> blocks)
    : kind_(kind), param_(shift_or_top), blocks_(std::move(blocks)) {}

int PolynomialLayout::monomial_degree(std::size_t i) const {
  const auto& a = monomials.at(i);
  return std::accumulate(a.begin(), a.end(), 0);
}

int codifferential_sign(int k) { return k % 2 == 0 ? -1 : 1; }

GradedOperator assemble_codifferential(int top, const GradedOperator& d, const GradedOperator& star) {
  std::vector<Matrix> blocks;
  for (int k = 0; k <= top; ++k) {
    const std::size_t src = star.block(k).cols();
    if (k == 0) {
      blocks.emplace_back(0, src);
      continue;
    }
    // degree k -> top-k -> top-k+1 -> k-1
    Matrix m = star.block(top - k + 1) * d.block(top - k) * star.block(k);
    m *= Rational(codifferential_sign(k));
    blocks.push_back(std::move(m));
  }
  return GradedOperator::shift(-1, std::move(blocks));
}

namespace {

std::vector<std::string> generator_names(int n, const char* x, const char* y) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    names.push_back(std::string(x) + std::to_string(i));
    names.push_back(std::string(y) + std::to_string(i));
  }
  return names;
}

std::vector<std::string> differential_names(const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back("d" + v);
  return out;
}

std::vector<Matrix> exterior_stars(const ExteriorAlgebra& ext) {
  std::vector<Matrix> s;
  for (int k = 0; k <= ext.generators(); ++k) s.push_back(symplectic_star(ext, k));
  return s;
}

// all exponent vectors of length m with total degree <= cutoff, graded then
// reverse-lexicographic in the exponents (x1 before y1 before x2 ...)
std::vector<std::vector<int>> monomials_up_to(int m, int cutoff) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(m), 0);
  for (int deg = 0; deg <= cutoff; ++deg) {
    // enumerate compositions of deg into m parts
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == m - 1) {
        a[static_cast<std::size_t>(pos)] = left;
        out.push_back(a);
        return;
      }
      for (int v = left; v >= 0; --v) {
        a[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, left - v);
      }
    };
    if (m == 0) {
      if (deg == 0) out.emplace_back();
    } else {
      rec(rec, 0, deg);
    }
  }
  return out;
}

std::string monomial_label(const std::vector<int>& a, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

std::string combine_label(const std::string& coeff, const std::string& ext) {
  if (ext == "1") return coeff;
  if (coeff == "1") return ext;
  return coeff + "*" + ext;
}

std::vector<Mask> indices_of(Mask mask) {
  std::vector<Mask> out;
  for (Mask r = mask; r; r &= r - 1) out.push_back(static_cast<Mask>(std::countr_zero(r)));
  return out;
}

}  // namespace

ModelPtr build_torus_model(int n) {
  if (n < 1) throw PreconditionError("build_torus_model", "n must be at least 1");
  const int top = 2 * n;
  ExteriorAlgebra ext(top);
  const auto names = differential_names(generator_names(n, "x", "y"));
  auto model = std::make_shared<ComplexModel>();
  model->name = "torus_n" + std::to_string(n);
  model->kind = ModelKind::Torus;
  model->top_degree = top;
  std::vector<Matrix> d, inner;
  for (int k = 0; k <= top; ++k) {
    std::vector<std::string> labels;
    for (Mask m : ext.basis(k)) labels.push_back(ext.label(m, names));
    model->graded_basis.push_back(std::move(labels));
    d.emplace_back(ext.dim(k + 1), ext.dim(k));
    inner.push_back(Matrix::identity(ext.dim(k)));
  }
  model->d = GradedOperator::shift(1, std::move(d));
  model->star_s = GradedOperator::complement(top, exterior_stars(ext));
  model->d_lambda = assemble_codifferential(top, model->d, model->star_s);
  model->inner = std::move(inner);
  return model;
}

ModelPtr build_polynomial_model(int n, int cutoff) {
  if (n < 1) throw PreconditionError("build_polynomial_model", "n must be at least 1");
  if (cutoff < 2) throw PreconditionError("build_polynomial_model", "cutoff must be at least 2");
  const int top = 2 * n;
  auto layout = std::make_shared<PolynomialLayout>();
  layout->n = n;
  layout->cutoff = cutoff;
  layout->monomials = monomials_up_to(top, cutoff);
  for (std::size_t i = 0; i < layout->monomials.size(); ++i) layout->monomial_index[layout->monomials[i]] = i;
  layout->exterior = ExteriorAlgebra(top);
  const auto& ext = layout->exterior;
  const std::size_t nm = layout->monomials.size();

  const auto vars = generator_names(n, "x", "y");
  const auto dnames = differential_names(vars);

  auto model = std::make_shared<ComplexModel>();
  model->name = "polynomial_n" + std::to_string(n) + "_D" + std::to_string(cutoff);
  model->kind = ModelKind::Polynomial;
  model->top_degree = top;
  model->polynomial = layout;

  std::vector<Matrix> d, stars;
  std::vector<std::vector<std::size_t>> window;
  const auto ext_stars = exterior_stars(ext);
  for (int k = 0; k <= top; ++k) {
    std::vector<std::string> labels;
    std::vector<std::size_t> win;
    for (std::size_t mi = 0; mi < nm; ++mi) {
      const std::string coeff = monomial_label(layout->monomials[mi], vars);
      for (std::size_t e = 0; e < ext.dim(k); ++e) {
        labels.push_back(combine_label(coeff, ext.label(ext.basis(k)[e], dnames)));
        if (layout->monomial_degree(mi) <= cutoff - 2) win.push_back(layout->index(mi, e, k));
      }
    }
    model->graded_basis.push_back(std::move(labels));
    window.push_back(std::move(win));

    // d(x^a e_I) = Σ_j a_j x^(a - e_j) e_j ∧ e_I
    Matrix dk(nm * ext.dim(k + 1), nm * ext.dim(k));
    if (k < top) {
      for (std::size_t mi = 0; mi < nm; ++mi) {
        const auto& a = layout->monomials[mi];
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (a[j] == 0) continue;
          auto lower = a;
          --lower[j];
          const std::size_t target = layout->monomial_index.at(lower);
          const Mask ej = Mask{1} << j;
          for (std::size_t e = 0; e < ext.dim(k); ++e) {
            const Mask mask = ext.basis(k)[e];
            const int s = ExteriorAlgebra::wedge_sign(ej, mask);
            if (s == 0) continue;
            dk(layout->index(target, ext.index(ej | mask), k + 1), layout->index(mi, e, k)) += s * a[j];
          }
        }
      }
    }
    d.push_back(std::move(dk));
    stars.push_back(kron(Matrix::identity(nm), ext_stars[static_cast<std::size_t>(k)]));
  }
  model->d = GradedOperator::shift(1, std::move(d));
  model->star_s = GradedOperator::complement(top, std::move(stars));
  model->d_lambda = assemble_codifferential(top, model->d, model->star_s);
  model->window = std::move(window);
  return model;
}

namespace {

bool positive_half(int m1, int m2) { return m1 > 0 || (m1 == 0 && m2 > 0); }

std::string mode_label(const FourierMode& f) {
  if (f.m1 == 0 && f.m2 == 0) return "1";
  return std::string(f.sine ? "sin" : "cos") + "(" + std::to_string(f.m1) + "," + std::to_string(f.m2) + ")";
}

}  // namespace

SuspensionComplex build_suspension_complex(int cutoff, const Matrix& monodromy) {
  if (cutoff < 1) throw PreconditionError("build_suspension_complex", "cutoff must be at least 1");
  if (monodromy.rows() != 2 || monodromy.cols() != 2) {
    throw ShapeError("build_suspension_complex", "monodromy must be 2 x 2");
  }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (monodromy(i, j).get_den() != 1) throw PreconditionError("build_suspension_complex", "monodromy must be integral");
  const Rational det = determinant(monodromy);
  if (abs(det) != 1) throw PreconditionError("build_suspension_complex", "monodromy must be invertible over Z");

  SuspensionComplex c;
  c.cutoff = cutoff;
  c.monodromy = monodromy;
  c.functions.push_back({0, 0, false});
  for (int m1 = 0; m1 <= cutoff; ++m1)
    for (int m2 = -cutoff; m2 <= cutoff; ++m2)
      if (positive_half(m1, m2)) {
        c.functions.push_back({m1, m2, false});
        c.functions.push_back({m1, m2, true});
      }
  const std::size_t nf = c.functions.size();
  auto function_index = [&](int m1, int m2, bool sine) -> std::size_t {
    if (m1 == 0 && m2 == 0) return 0;
    // position of (m1, m2) among positive half-lattice modes in the box
    std::size_t pos = m1 == 0 ? static_cast<std::size_t>(m2 - 1)
                              : static_cast<std::size_t>(cutoff) +
                                    static_cast<std::size_t>(m1 - 1) * static_cast<std::size_t>(2 * cutoff + 1) +
                                    static_cast<std::size_t>(m2 + cutoff);
    return 1 + 2 * pos + (sine ? 1 : 0);
  };

  ExteriorAlgebra ext(2);
  const std::vector<std::string> dnames{"dx1", "dx2"};
  const auto ext_stars = exterior_stars(ext);
  auto idx = [&](std::size_t f, std::size_t e, int k) { return f * ext.dim(k) + e; };

  for (int k = 0; k <= 2; ++k) {
    std::vector<std::string> labels;
    for (std::size_t f = 0; f < nf; ++f)
      for (std::size_t e = 0; e < ext.dim(k); ++e)
        labels.push_back(combine_label(mode_label(c.functions[f]), ext.label(ext.basis(k)[e], dnames)));
    c.labels.push_back(std::move(labels));
    c.star.push_back(kron(Matrix::identity(nf), ext_stars[static_cast<std::size_t>(k)]));
    Matrix g(nf * ext.dim(k), nf * ext.dim(k));
    for (std::size_t f = 0; f < nf; ++f)
      for (std::size_t e = 0; e < ext.dim(k); ++e) g(idx(f, e, k), idx(f, e, k)) = f == 0 ? Rational(1) : Rational(1, 2);
    c.gram.push_back(std::move(g));
  }

  // d / 2π: d cos_m = -sin_m (m1 dx1 + m2 dx2), d sin_m = cos_m (m1 dx1 + m2 dx2)
  Matrix d0(2 * nf, nf), d1(nf, 2 * nf);
  for (std::size_t f = 1; f < nf; ++f) {
    const auto& mode = c.functions[f];
    const std::size_t partner = mode.sine ? f - 1 : f + 1;
    const int s = mode.sine ? 1 : -1;
    d0(idx(partner, 0, 1), f) = s * mode.m1;
    d0(idx(partner, 1, 1), f) = s * mode.m2;
    // d(h dx1) = ∂₂h dx2∧dx1 = -∂₂h ω, d(h dx2) = ∂₁h ω
    d1(partner, idx(f, 0, 1)) = -s * mode.m2;
    d1(partner, idx(f, 1, 1)) = s * mode.m1;
  }
  c.d = {d0, d1, Matrix(0, nf)};

  // pullback by x -> Lx: mode m -> L^t m, dx_i -> Σ_j L_ij dx_j
  const long l11 = monodromy(0, 0).get_num().get_si(), l12 = monodromy(0, 1).get_num().get_si();
  const long l21 = monodromy(1, 0).get_num().get_si(), l22 = monodromy(1, 1).get_num().get_si();
  struct Image {
    bool in_box;
    std::size_t index;
    int sign;
  };
  auto image = [&](std::size_t f) -> Image {
    const auto& mode = c.functions[f];
    if (f == 0) return {true, 0, 1};
    long n1 = l11 * mode.m1 + l21 * mode.m2;
    long n2 = l12 * mode.m1 + l22 * mode.m2;
    int sign = 1;
    if (!positive_half(static_cast<int>(n1), static_cast<int>(n2))) {
      n1 = -n1;
      n2 = -n2;
      if (mode.sine) sign = -1;
    }
    if (std::abs(n1) > cutoff || std::abs(n2) > cutoff) return {false, 0, 0};
    return {true, function_index(static_cast<int>(n1), static_cast<int>(n2), mode.sine), sign};
  };
  std::vector<bool> stable(nf, false);
  for (std::size_t f = 0; f < nf; ++f) {
    std::size_t cur = f;
    for (std::size_t step = 0; step <= nf; ++step) {
      const auto im = image(cur);
      if (!im.in_box) break;
      cur = im.index;
      if (cur == f) {
        stable[f] = true;
        break;
      }
    }
  }

  const Matrix one_form_pull{{monodromy(0, 0), monodromy(1, 0)}, {monodromy(0, 1), monodromy(1, 1)}};
  for (int k = 0; k <= 2; ++k) {
    const std::size_t de = ext.dim(k);
    Matrix ext_pull = k == 0 ? Matrix::identity(1) : k == 1 ? one_form_pull : Matrix{{det}};
    Matrix p(nf * de, nf * de);
    std::vector<bool> in_box(nf * de), orbit(nf * de);
    for (std::size_t f = 0; f < nf; ++f) {
      const auto im = image(f);
      for (std::size_t e = 0; e < de; ++e) {
        in_box[idx(f, e, k)] = im.in_box;
        orbit[idx(f, e, k)] = stable[f];
        if (!im.in_box) continue;
        for (std::size_t e2 = 0; e2 < de; ++e2)
          if (sgn(ext_pull(e2, e)) != 0) p(idx(im.index, e2, k), idx(f, e, k)) = im.sign * ext_pull(e2, e);
      }
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      if (orbit[i]) keep.push_back(i);
    const Matrix fixed = (p - Matrix::identity(nf * de)).select_columns(keep);
    const Matrix ker = nullspace(fixed);
    Matrix basis(nf * de, ker.cols());
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t col = 0; col < ker.cols(); ++col) basis(keep[r], col) = ker(r, col);
    c.pullback.push_back(std::move(p));
    c.image_in_box.push_back(std::move(in_box));
    c.orbit_stable.push_back(std::move(orbit));
    c.invariant_basis.push_back(std::move(basis));
  }
  return c;
}

namespace {

Matrix restrict_operator(const Matrix& full, const Matrix& src_basis, const Matrix& dst_basis, const char* op) {
  const auto r = solve(dst_basis, full * src_basis);
  if (!r) throw PreconditionError(op, "operator does not preserve the invariant subcomplex");
  return *r;
}

}  // namespace

ModelPtr build_suspension_model(int cutoff, const Matrix& monodromy) {
  const SuspensionComplex c = build_suspension_complex(cutoff, monodromy);
  auto model = std::make_shared<ComplexModel>();
  model->name = "suspension_N" + std::to_string(cutoff);
  model->kind = ModelKind::Suspension;
  model->top_degree = 2;
  std::vector<Matrix> d, star, inner;
  for (int k = 0; k <= 2; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const Matrix& b = c.invariant_basis[ku];
    std::vector<std::string> labels;
    for (std::size_t col = 0; col < b.cols(); ++col) {
      std::string label;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        if (sgn(b(r, col)) == 0) continue;
        const std::string term = c.labels[ku][r];
        const std::string coeff = b(r, col) == 1 ? "" : to_string(b(r, col)) + "*";
        label += (label.empty() ? "" : "+") + coeff + term;
      }
      labels.push_back(label);
    }
    model->graded_basis.push_back(std::move(labels));
    if (k < 2) d.push_back(restrict_operator(c.d[ku], b, c.invariant_basis[ku + 1], "build_suspension_model"));
    else d.emplace_back(0, b.cols());
    star.push_back(restrict_operator(c.star[ku], b, c.invariant_basis[2 - ku], "build_suspension_model"));
    inner.push_back(b.transpose() * c.gram[ku] * b);
  }
  model->d = GradedOperator::shift(1, std::move(d));
  model->star_s = GradedOperator::complement(2, std::move(star));
  model->d_lambda = assemble_codifferential(2, model->d, model->star_s);
  model->inner = std::move(inner);
  return model;
}

FormVector::FormVector(ModelPtr m, int k, Vector c) : model(std::move(m)), degree(k), coords(std::move(c)) {
  if (!model) throw PreconditionError("FormVector", "missing model");
  if (k < -1 || k > model->top_degree + 1) throw DegreeError("FormVector", "degree out of range");
  if (coords.size() != model->dim(k)) throw ShapeError("FormVector", "coordinate length does not match the basis");
}

FormVector FormVector::zero(ModelPtr m, int k) {
  const std::size_t n = m ? m->dim(k) : 0;
  return {std::move(m), k, Vector(n)};
}

namespace {

void require_compatible(const FormVector& a, const FormVector& b, const char* op) {
  if (a.model != b.model && (!a.model || !b.model || a.model->name != b.model->name)) {
    throw ContextMismatch(op, "forms belong to different models");
  }
  if (a.degree != b.degree) throw DegreeError(op, "forms have different degrees");
}

}  // namespace

FormVector operator+(const FormVector& a, const FormVector& b) {
  require_compatible(a, b, "FormVector::+");
  Vector c = a.coords;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
  return {a.model, a.degree, std::move(c)};
}

FormVector operator-(const FormVector& a, const FormVector& b) {
  require_compatible(a, b, "FormVector::-");
  Vector c = a.coords;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords[i];
  return {a.model, a.degree, std::move(c)};
}

FormVector operator*(const Rational& s, const FormVector& a) {
  Vector c = a.coords;
  for (auto& x : c) x *= s;
  return {a.model, a.degree, std::move(c)};
}

FormVector apply(const GradedOperator& op, const FormVector& v) {
  const int top = v.model->top_degree;
  if (v.degree < 0 || v.degree > top || v.degree >= op.degrees()) throw DegreeError("apply", "degree out of range");
  const int target = op.target_degree(v.degree);
  if (target < 0 || target > top) return FormVector::zero(v.model, target);
  return {v.model, target, op.block(v.degree) * std::span<const Rational>(v.coords)};
}

FormVector star_s_apply(const FormVector& v) { return apply(v.model->star_s, v); }
FormVector d_apply(const FormVector& v) { return apply(v.model->d, v); }
FormVector d_lambda_apply(const FormVector& v) { return apply(v.model->d_lambda, v); }

namespace {

// radial homotopy K(x^a e_I) = 1/(|a|+k) Σ_p (-1)^p x^(a + e_{I_p}) e_{I \ I_p}
FormVector radial_homotopy(const FormVector& v) {
  const auto& model = v.model;
  const auto& layout = *model->polynomial;
  const auto& ext = layout.exterior;
  const int k = v.degree;
  if (k == 0) throw DegreeError("poincare_antiderivative", "0-forms have no d-primitive");
  Vector out(model->dim(k - 1));
  const std::size_t de = ext.dim(k);
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (sgn(v.coords[i]) == 0) continue;
    const std::size_t mi = i / de, e = i % de;
    const auto& a = layout.monomials[mi];
    const int total = layout.monomial_degree(mi) + k;
    if (layout.monomial_degree(mi) + 1 > layout.cutoff) {
      throw PreconditionError("poincare_antiderivative", "primitive exceeds the coefficient cutoff");
    }
    const Mask mask = ext.basis(k)[e];
    const auto gens = indices_of(mask);
    for (std::size_t p = 0; p < gens.size(); ++p) {
      auto raised = a;
      ++raised[gens[p]];
      const std::size_t target = layout.monomial_index.at(raised);
      const Mask rest = mask & ~(Mask{1} << gens[p]);
      const Rational coeff = Rational(p % 2 == 0 ? 1 : -1, total) * v.coords[i];
      out[layout.index(target, ext.index(rest), k - 1)] += coeff;
    }
  }
  return {model, k - 1, std::move(out)};
}

}  // namespace

FormVector poincare_antiderivative(const FormVector& v, Primitive op) {
  if (!v.model || v.model->kind != ModelKind::Polynomial || !v.model->polynomial) {
    throw UnsupportedError("poincare_antiderivative", "only available on polynomial models");
  }
  const int top = v.model->top_degree;
  if (op == Primitive::D) {
    if (v.degree < 1) throw DegreeError("poincare_antiderivative", "0-forms have no d-primitive");
    if (!d_apply(v).is_zero()) throw PreconditionError("poincare_antiderivative", "form is not d-closed");
    FormVector w = radial_homotopy(v);
    if (!(d_apply(w) == v)) throw PreconditionError("poincare_antiderivative", "primitive check failed");
    return w;
  }
  if (v.degree > top - 1) throw DegreeError("poincare_antiderivative", "top-degree forms have no d^Λ-primitive");
  if (!d_lambda_apply(v).is_zero()) {
    throw PreconditionError("poincare_antiderivative", "form is not d^Λ-closed");
  }
  // d^Λ_j w = s_j ⋆d⋆ w = v  <=>  d(⋆w) = s_j ⋆v
  const int j = v.degree + 1;
  const FormVector u = star_s_apply(v);
  FormVector w = Rational(codifferential_sign(j)) * star_s_apply(radial_homotopy(u));
  if (!(d_lambda_apply(w) == v)) throw PreconditionError("poincare_antiderivative", "primitive check failed");
  return w;
}

namespace {

// constant-coefficient form in the polynomial or torus model from exterior coordinates
FormVector constant_form(const ModelPtr& model, int k, const Vector& ext_coords) {
  Vector c(model->dim(k));
  // the constant monomial is index 0 in both layouts
  for (std::size_t e = 0; e < ext_coords.size(); ++e) c[e] = ext_coords[e];
  return {model, k, std::move(c)};
}

const ExteriorAlgebra& exterior_of(const ModelPtr& model, ExteriorAlgebra& scratch) {
  if (model->polynomial) return model->polynomial->exterior;
  scratch = ExteriorAlgebra(model->top_degree);
  return scratch;
}

}  // namespace

FormVector omega_power(const ModelPtr& model, int k) {
  if (!model || (model->kind != ModelKind::Polynomial && model->kind != ModelKind::Torus)) {
    throw UnsupportedError("omega_power", "needs a torus or polynomial model");
  }
  const int n = model->top_degree / 2;
  if (k < 0 || k > n) throw DegreeError("omega_power", "power out of range");
  ExteriorAlgebra scratch(0);
  const auto& ext = exterior_of(model, scratch);
  Vector acc{Rational(1)};
  const Vector w = standard_symplectic_form(ext);
  for (int i = 0; i < k; ++i) acc = ext.wedge(2 * i, acc, 2, w);
  return constant_form(model, 2 * k, acc);
}

AlphaForm alpha_form(const ModelPtr& model, int k) {
  if (!model || model->kind != ModelKind::Polynomial || !model->polynomial) {
    throw UnsupportedError("alpha_form", "needs a polynomial model");
  }
  const auto& layout = *model->polynomial;
  const int n = layout.n;
  if (k < 1 || k > n) throw DegreeError("alpha_form", "k out of range");
  const auto& ext = layout.exterior;
  const int deg = 2 * k - 1;
  Vector c(model->dim(deg));
  auto unit = [&](std::size_t var) {
    std::vector<int> a(static_cast<std::size_t>(2 * n), 0);
    a[var] = 1;
    return layout.monomial_index.at(a);
  };
  // Σ over k-subsets I of {1..n} and j ∈ I: the product over I in increasing
  // order with dx_j∧dy_j replaced by x_j dy_j - y_j dx_j
  for (Mask subset = 0; subset < (Mask{1} << n); ++subset) {
    if (std::popcount(subset) != k) continue;
    for (Mask j : indices_of(subset)) {
      // (coefficient monomial, exterior mask, sign) terms of the product
      struct Term {
        std::size_t mono;
        Mask mask;
        int sign;
      };
      std::vector<Term> terms{{0, 0, 1}};
      for (Mask i : indices_of(subset)) {
        const Mask ex = Mask{1} << (2 * i), ey = Mask{1} << (2 * i + 1);
        std::vector<Term> next;
        for (const auto& t : terms) {
          if (i == j) {
            // t ∧ (x dy - y dx): coefficients multiply, exterior grows by one
            next.push_back({unit(2 * i), t.mask | ey, t.sign * ExteriorAlgebra::wedge_sign(t.mask, ey)});
            next.push_back({unit(2 * i + 1), t.mask | ex, -t.sign * ExteriorAlgebra::wedge_sign(t.mask, ex)});
          } else {
            next.push_back({t.mono, t.mask | ex | ey, t.sign * ExteriorAlgebra::wedge_sign(t.mask, ex | ey)});
          }
        }
        terms = std::move(next);
      }
      for (const auto& t : terms) c[layout.index(t.mono, ext.index(t.mask), deg)] += t.sign;
    }
  }
  FormVector printed(model, deg, std::move(c));
  const FormVector target = omega_power(model, k);
  const FormVector dp = d_apply(printed);
  // find λ with λ dp = target
  Rational lambda;
  bool found = false;
  for (std::size_t i = 0; i < dp.coords.size(); ++i)
    if (sgn(dp.coords[i]) != 0) {
      lambda = target.coords[i] / dp.coords[i];
      found = true;
      break;
    }
  if (!found || !(lambda * dp == target)) throw PreconditionError("alpha_form", "displayed form is not a multiple of a primitive");
  return {lambda * printed, lambda};
}

namespace {

// λ with λ b = a, if a is a multiple of b
std::optional<Rational> proportionality(const FormVector& a, const FormVector& b) {
  for (std::size_t i = 0; i < b.coords.size(); ++i)
    if (sgn(b.coords[i]) != 0) {
      const Rational c = a.coords[i] / b.coords[i];
      if (c * b == a) return c;
      return std::nullopt;
    }
  return std::nullopt;
}

}  // namespace

AlphaRelations alpha_relations(const ModelPtr& model, int k) {
  const AlphaForm a = alpha_form(model, k);
  const int n = model->top_degree / 2;
  return {proportionality(star_s_apply(a.form), alpha_form(model, n - k + 1).form),
          proportionality(d_lambda_apply(a.form), omega_power(model, k - 1))};
}

bool IdentityReport::all() const {
  if (!shapes_ok) return false;
  return std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) {
    return d.d_squared && d.star_involution && d.codifferential_definition && d.d_lambda_squared && d.anticommutation;
  });
}

IdentityReport verify_identities(const ComplexModel& model) {
  IdentityReport r;
  const int top = model.top_degree;
  r.shapes_ok = model.d.degrees() == top + 1 && model.star_s.degrees() == top + 1 &&
                model.d_lambda.degrees() == top + 1 && static_cast<int>(model.graded_basis.size()) == top + 1;
  if (!r.shapes_ok) return r;
  for (int k = 0; k <= top; ++k) {
    const std::size_t dk = model.dim(k);
    r.shapes_ok = r.shapes_ok && model.d.block(k).cols() == dk && model.d.block(k).rows() == model.dim(k + 1) &&
                  model.star_s.block(k).cols() == dk && model.star_s.block(k).rows() == model.dim(top - k) &&
                  model.d_lambda.block(k).cols() == dk && model.d_lambda.block(k).rows() == model.dim(k - 1);
  }
  if (!r.shapes_ok) return r;
  for (int k = 0; k <= top; ++k) {
    IdentityReport::Degree g;
    g.degree = k;
    const Matrix& d = model.d.block(k);
    const Matrix& s = model.star_s.block(k);
    const Matrix& l = model.d_lambda.block(k);
    g.d_squared = k == top || (model.d.block(k + 1) * d).is_zero();
    g.star_involution = model.star_s.block(top - k) * s == Matrix::identity(model.dim(k));
    if (k == 0) {
      g.codifferential_definition = l.rows() == 0;
    } else {
      Matrix expect = model.star_s.block(top - k + 1) * model.d.block(top - k) * s;
      expect *= Rational(codifferential_sign(k));
      g.codifferential_definition = expect == l;
    }
    g.d_lambda_squared = k <= 1 || (model.d_lambda.block(k - 1) * l).is_zero();
    Matrix anti(model.dim(k), model.dim(k));
    if (k > 0) anti += model.d.block(k - 1) * l;
    if (k < top) anti += model.d_lambda.block(k + 1) * d;
    g.anticommutation = anti.is_zero();
    r.degrees.push_back(g);
  }
  return r;
}

Matrix window_embedding(const ComplexModel& model, int k) {
  const std::size_t n = model.dim(k);
  if (!model.window) return Matrix::identity(n);
  const auto& w = model.window->at(static_cast<std::size_t>(k));
  Matrix e(n, w.size());
  for (std::size_t j = 0; j < w.size(); ++j) e(w[j], j) = 1;
  return e;
}

}  // namespace symplab::model
