#include <algorithm>
#include <random>

#include "doctest.h"
#include "symplab/errors.hpp"
#include "symplab/model_complexes.hpp"

using namespace symplab;
using namespace symplab::model;

namespace {

FormVector basis_form(const ModelPtr& m, int k, const std::string& label) {
  const auto& labels = m->graded_basis.at(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) {
      Vector c(labels.size());
      c[i] = 1;
      return {m, k, c};
    }
  FAIL("no basis element " << label);
  return FormVector::zero(m, k);
}

FormVector random_form(const ModelPtr& m, int k, std::mt19937_64& rng, bool windowed) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Vector c(m->dim(k));
  if (windowed && m->window) {
    for (std::size_t i : m->window->at(static_cast<std::size_t>(k))) c[i] = dist(rng);
  } else {
    for (auto& x : c) x = dist(rng);
  }
  return {m, k, c};
}

}  // namespace

TEST_CASE("exterior algebra signs and wedge") {
  CHECK(ExteriorAlgebra::wedge_sign(0b01, 0b10) == 1);
  CHECK(ExteriorAlgebra::wedge_sign(0b10, 0b01) == -1);
  CHECK(ExteriorAlgebra::wedge_sign(0b01, 0b01) == 0);
  CHECK(ExteriorAlgebra::wedge_sign(0b100, 0b011) == 1);
  ExteriorAlgebra ext(4);
  CHECK(ext.dim(2) == 6);
  const Vector w = standard_symplectic_form(ext);
  const Vector w2 = ext.wedge(2, w, 2, w);
  REQUIRE(w2.size() == 1);
  CHECK(w2[0] == 2);
}

TEST_CASE("torus model dimensions and star") {
  const auto t1 = build_torus_model(1);
  CHECK(t1->dim(0) == 1);
  CHECK(t1->dim(1) == 2);
  CHECK(t1->dim(2) == 1);
  const auto one = FormVector(t1, 0, {1});
  const auto omega = omega_power(t1, 1);
  CHECK(star_s_apply(one) == omega);
  CHECK(star_s_apply(omega) == one);
  const auto t2 = build_torus_model(2);
  for (int k = 0; k <= 4; ++k) CHECK(t2->dim(k) == std::vector<std::size_t>{1, 4, 6, 4, 1}[static_cast<std::size_t>(k)]);
  CHECK(star_s_apply(FormVector(t2, 0, {1})) == Rational(1, 2) * omega_power(t2, 2));
  CHECK(verify_identities(*t1).all());
  CHECK(verify_identities(*t2).all());
  CHECK_THROWS_AS(build_torus_model(0), PreconditionError);
}

TEST_CASE("star satisfies its defining identity") {
  // α ∧ ⋆β = G(α, β) vol with G induced by the inverse of Ω
  for (int n = 1; n <= 3; ++n) {
    ExteriorAlgebra ext(2 * n);
    const Matrix pairing = inverse(standard_symplectic_matrix(n));
    for (int k = 0; k <= 2 * n; ++k) {
      const Matrix s = symplectic_star(ext, k);
      const Matrix g = induced_pairing(ext, pairing, k);
      for (std::size_t a = 0; a < ext.dim(k); ++a)
        for (std::size_t b = 0; b < ext.dim(k); ++b) {
          Vector ea(ext.dim(k)), sb = s.column(b);
          ea[a] = 1;
          CHECK(ext.wedge(k, ea, 2 * n - k, sb)[0] == g(a, b));
        }
    }
  }
}

TEST_CASE("polynomial model basics") {
  const auto p = build_polynomial_model(1, 2);
  CHECK(p->dim(1) == 12);
  CHECK(p->dim(0) == 6);
  // d(x dy) = dx ∧ dy
  CHECK(d_apply(basis_form(p, 1, "x1*dy1")) == basis_form(p, 2, "dx1^dy1"));
  CHECK(d_apply(basis_form(p, 0, "x1*y1")) == basis_form(p, 1, "y1*dx1") + basis_form(p, 1, "x1*dy1"));
  // with G = Ω⁻¹ the star negates 1-forms in dimension two
  CHECK(star_s_apply(basis_form(p, 1, "dx1")) == Rational(-1) * basis_form(p, 1, "dx1"));
  CHECK(star_s_apply(basis_form(p, 1, "y1*dy1")) == Rational(-1) * basis_form(p, 1, "y1*dy1"));
  CHECK(star_s_apply(basis_form(p, 2, "x1^2*dx1^dy1")) == basis_form(p, 0, "x1^2"));
  CHECK_THROWS_AS(build_polynomial_model(1, 1), PreconditionError);
}

TEST_CASE("polynomial d lowers coefficient degree by one and the star preserves it") {
  const auto p = build_polynomial_model(2, 3);
  const auto& layout = *p->polynomial;
  for (int k = 0; k <= 4; ++k) {
    const std::size_t ds = layout.exterior.dim(k);
    const Matrix& d = p->d.block(k);
    const std::size_t dt = layout.exterior.dim(k + 1);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (sgn(d(r, c)) != 0) REQUIRE(layout.monomial_degree(r / dt) + 1 == layout.monomial_degree(c / ds));
    const Matrix& s = p->star_s.block(k);
    const std::size_t st = layout.exterior.dim(4 - k);
    for (std::size_t r = 0; r < s.rows(); ++r)
      for (std::size_t c = 0; c < s.cols(); ++c)
        if (sgn(s(r, c)) != 0) REQUIRE(r / st == c / ds);
  }
}

TEST_CASE("operator identities hold on every built model") {
  for (const auto& m : {build_torus_model(1), build_torus_model(2), build_polynomial_model(1, 4),
                        build_polynomial_model(1, 6), build_polynomial_model(2, 3), build_suspension_model(2),
                        build_suspension_model(4)}) {
    const auto r = verify_identities(*m);
    CHECK_MESSAGE(r.all(), m->name);
    CHECK(r.degrees.size() == static_cast<std::size_t>(m->top_degree + 1));
  }
}

TEST_CASE("unsigned star-d-star does not anticommute with d") {
  const auto p = build_polynomial_model(1, 4);
  const Matrix unsigned_dl1 = p->star_s.block(2) * p->d.block(1) * p->star_s.block(1);
  const Matrix unsigned_dl2 = p->star_s.block(1) * p->d.block(0) * p->star_s.block(2);
  // on 1-forms: d ∘ (⋆d⋆)_1 + (⋆d⋆)_2 ∘ d
  const Matrix anti = p->d.block(0) * unsigned_dl1 + unsigned_dl2 * p->d.block(1);
  CHECK_FALSE(anti.is_zero());
  // the signed codifferential agrees with ⋆d⋆ on odd degrees
  CHECK(p->d_lambda.block(1) == unsigned_dl1);
  CHECK(p->d_lambda.block(2) == -unsigned_dl2);
}

TEST_CASE("corrupted d is detected") {
  auto m = std::make_shared<ComplexModel>(*build_polynomial_model(1, 4));
  // d(y1 dy1) becomes nonzero, so d(d(y1²)) no longer vanishes
  const auto& labels = m->graded_basis[1];
  const auto col = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), "y1*dy1") - labels.begin());
  m->d.block(1)(0, col) = 1;
  m->d_lambda = assemble_codifferential(m->top_degree, m->d, m->star_s);
  CHECK_FALSE(verify_identities(*m).all());
  auto bad_star = std::make_shared<ComplexModel>(*build_torus_model(1));
  bad_star->star_s.block(1) = Rational(2) * Matrix::identity(2);
  CHECK_FALSE(verify_identities(*bad_star).all());
}

TEST_CASE("suspension invariant dimensions") {
  for (int n = 1; n <= 8; ++n) {
    const auto s = build_suspension_model(n);
    for (int k = 0; k <= 2; ++k) CHECK(s->dim(k) == static_cast<std::size_t>(2 * n + 1));
  }
  const auto s = build_suspension_model(2);
  CHECK(s->graded_basis[1][0] == "dx2");
  for (const auto& label : s->graded_basis[1]) CHECK(label.find("dx1") == std::string::npos);
  CHECK_THROWS_AS(build_suspension_model(0), PreconditionError);
}

TEST_CASE("suspension complex: invariance oracle and pullback compatibility") {
  const auto c = build_suspension_complex(3);
  for (int k = 0; k <= 2; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const Matrix& p = c.pullback[ku];
    const Matrix& b = c.invariant_basis[ku];
    CHECK(b.cols() == 7);
    CHECK(p * b == b);
    // P d = d P on columns whose image stays in the box
    if (k < 2) {
      const Matrix lhs = c.pullback[ku + 1] * c.d[ku];
      const Matrix rhs = c.d[ku] * p;
      for (std::size_t col = 0; col < p.cols(); ++col)
        if (c.image_in_box[ku][col]) REQUIRE(lhs.column(col) == rhs.column(col));
    }
  }
  // ω₀ = dx1 ∧ dx2 is invariant
  Vector omega(c.dim(2));
  omega[0] = 1;
  CHECK(c.pullback[2] * std::span<const Rational>(omega) == omega);
  // stable modes are exactly those with m1 = 0
  for (std::size_t f = 0; f < c.functions.size(); ++f) CHECK(c.orbit_stable[0][f] == (c.functions[f].m1 == 0));
}

TEST_CASE("suspension codifferential examples") {
  const auto s = build_suspension_model(2);
  // g = cos(2π x2): d^Λ(g ω₀) = g' dx2 = -2π sin(2π x2) dx2; stored d is d / 2π
  const auto g_omega = basis_form(s, 2, "cos(0,1)*dx1^dx2");
  CHECK(d_lambda_apply(g_omega) == Rational(-1) * basis_form(s, 1, "sin(0,1)*dx2"));
  const auto f = basis_form(s, 0, "sin(0,2)");
  const auto dl = d_lambda_apply(f);
  CHECK(dl.degree == -1);
  CHECK(dl.is_zero());
  CHECK(d_lambda_apply(basis_form(s, 1, "cos(0,2)*dx2")).is_zero());
  CHECK(d_apply(f) == Rational(2) * basis_form(s, 1, "cos(0,2)*dx2"));
}

TEST_CASE("FormVector validation") {
  const auto t = build_torus_model(1);
  CHECK_THROWS_AS(FormVector(t, 1, {1}), ShapeError);
  CHECK_THROWS_AS(FormVector(t, 5, {}), DegreeError);
  const auto other = build_torus_model(2);
  CHECK_THROWS_AS(FormVector(t, 0, {1}) + FormVector(other, 0, {1}), ContextMismatch);
  CHECK(d_apply(FormVector(t, 2, {1})).degree == 3);
}

TEST_CASE("d-antiderivative examples") {
  const auto p = build_polynomial_model(1, 4);
  const auto omega = omega_power(p, 1);
  const auto w = poincare_antiderivative(omega, Primitive::D);
  CHECK(d_apply(w) == omega);
  CHECK(w == Rational(1, 2) * (basis_form(p, 1, "x1*dy1") - basis_form(p, 1, "y1*dx1")));
  CHECK(poincare_antiderivative(basis_form(p, 1, "dx1"), Primitive::D) == basis_form(p, 0, "x1"));
  CHECK_THROWS_AS(poincare_antiderivative(basis_form(p, 1, "x1*dy1"), Primitive::D), PreconditionError);
  CHECK_THROWS_AS(poincare_antiderivative(FormVector(p, 0, Vector(p->dim(0))), Primitive::D), DegreeError);
  const auto t = build_torus_model(1);
  CHECK_THROWS_AS(poincare_antiderivative(omega_power(t, 1), Primitive::D), UnsupportedError);
}

TEST_CASE("d^Λ-antiderivative examples") {
  const auto p = build_polynomial_model(1, 4);
  const auto one = basis_form(p, 0, "1");
  const auto w = poincare_antiderivative(one, Primitive::DLambda);
  CHECK(w.degree == 1);
  CHECK(d_lambda_apply(w) == one);
  CHECK_THROWS_AS(poincare_antiderivative(omega_power(p, 1), Primitive::DLambda), DegreeError);
  CHECK_THROWS_AS(poincare_antiderivative(basis_form(p, 1, "x1*dy1"), Primitive::DLambda), PreconditionError);
}

TEST_CASE("antiderivatives of random closed forms") {
  std::mt19937_64 rng(8);
  for (const auto& p : {build_polynomial_model(1, 5), build_polynomial_model(2, 3)}) {
    for (int k = 1; k <= p->top_degree; ++k)
      for (int t = 0; t < 3; ++t) {
        // d of a windowed form is closed and its primitive fits the cutoff
        const auto z = random_form(p, k - 1, rng, true);
        const auto v = d_apply(z);
        CHECK(d_apply(poincare_antiderivative(v, Primitive::D)) == v);
        const auto u = random_form(p, k, rng, true);
        const auto dl = d_lambda_apply(u);
        CHECK(d_lambda_apply(poincare_antiderivative(dl, Primitive::DLambda)) == dl);
      }
  }
}

TEST_CASE("alpha forms") {
  const auto p1 = build_polynomial_model(1, 3);
  const auto a1 = alpha_form(p1, 1);
  CHECK(a1.normalization == Rational(1, 2));
  CHECK(d_apply(a1.form) == omega_power(p1, 1));
  CHECK(d_lambda_apply(a1.form) == Rational(-1) * omega_power(p1, 0));
  CHECK(star_s_apply(a1.form) == Rational(-1) * a1.form);

  const auto p2 = build_polynomial_model(2, 3);
  const auto b1 = alpha_form(p2, 1);
  const auto b3 = alpha_form(p2, 2);
  CHECK(b1.normalization == Rational(1, 2));
  CHECK(b3.normalization == Rational(1, 2));
  CHECK(d_apply(b1.form) == omega_power(p2, 1));
  CHECK(d_apply(b3.form) == omega_power(p2, 2));
  CHECK(star_s_apply(b1.form) == Rational(-1) * b3.form);
  CHECK(star_s_apply(b3.form) == Rational(-1) * b1.form);
  // d^Λ α_{2k-1} = -⋆ω₀^(n-k+1), and ⋆ω₀² = 2 in dimension four
  CHECK(d_lambda_apply(b1.form) == Rational(-1) * star_s_apply(omega_power(p2, 2)));
  CHECK(d_lambda_apply(b1.form) == Rational(-2) * omega_power(p2, 0));
  CHECK(d_lambda_apply(b3.form) == Rational(-1) * omega_power(p2, 1));
  const auto r1 = alpha_relations(p2, 1);
  CHECK(*r1.star_constant == -1);
  CHECK(*r1.codifferential_constant == -2);
  CHECK(*alpha_relations(p2, 2).codifferential_constant == -1);
  CHECK(*alpha_relations(p1, 1).codifferential_constant == -1);
  CHECK(*alpha_relations(p1, 1).star_constant == -1);
  const auto p3 = build_polynomial_model(3, 2);
  for (int k = 1; k <= 3; ++k) {
    const auto r = alpha_relations(p3, k);
    const auto i = static_cast<std::size_t>(k - 1);
    CHECK(*r.star_constant == std::vector<Rational>{Rational(-1, 2), -1, -2}[i]);
    CHECK(*r.codifferential_constant == -(4 - k));
  }
  CHECK_THROWS_AS(alpha_form(p2, 3), DegreeError);
  CHECK_THROWS_AS(alpha_form(p2, 0), DegreeError);
}

TEST_CASE("window embedding") {
  const auto p = build_polynomial_model(1, 4);
  const Matrix e = window_embedding(*p, 1);
  CHECK(e.rows() == p->dim(1));
  CHECK(e.cols() == 12);
  CHECK(window_embedding(*build_torus_model(1), 1) == Matrix::identity(2));
}
