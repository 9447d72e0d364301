#include <random>

#include "doctest.h"
#include "symplab/cohomology_engine.hpp"
#include "symplab/errors.hpp"

using namespace symplab;
using namespace symplab::model;
using namespace symplab::cohomology;

using Dims = std::vector<std::size_t>;

namespace {

FormVector random_form(const ModelPtr& m, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  Vector c(m->dim(k));
  for (auto& x : c) x = dist(rng);
  return {m, k, c};
}

}  // namespace

TEST_CASE("torus: all theories agree") {
  for (int n = 1; n <= 2; ++n) {
    const auto t = build_torus_model(n);
    const Dims expect = n == 1 ? Dims{1, 2, 1} : Dims{1, 4, 6, 4, 1};
    CHECK(de_rham(*t).dims == expect);
    CHECK(d_plus_dlambda_cohomology(*t).dims == expect);
    CHECK(dd_lambda_cohomology(*t).dims == expect);
    CHECK_FALSE(de_rham(*t).windowed);
  }
}

TEST_CASE("polynomial model n=1: windowed dimensions are stable") {
  for (int cutoff : {4, 6, 8}) {
    const auto p = build_polynomial_model(1, cutoff);
    const auto dpl = d_plus_dlambda_cohomology(*p);
    const auto ddl = dd_lambda_cohomology(*p);
    CHECK(dpl.windowed);
    CHECK(dpl.dims == Dims{1, 0, 1});
    CHECK(ddl.dims == Dims{0, 1, 0});
    CHECK(de_rham(*p).dims == Dims{1, 0, 0});
  }
}

TEST_CASE("polynomial model n=1: unwindowed counts see the truncation boundary") {
  const auto p = build_polynomial_model(1, 4);
  const auto dpl = d_plus_dlambda_cohomology(*p, {false, false});
  CHECK_FALSE(dpl.windowed);
  CHECK(dpl.dims != Dims{1, 0, 1});
}

TEST_CASE("polynomial model n=2 windowed") {
  const auto p = build_polynomial_model(2, 4);
  CHECK(d_plus_dlambda_cohomology(*p).dims == Dims{1, 0, 1, 0, 1});
  CHECK(dd_lambda_cohomology(*p).dims == Dims{0, 1, 0, 1, 0});
}

TEST_CASE("suspension dimensions scale with the cutoff") {
  for (int n = 1; n <= 8; ++n) {
    const auto s = build_suspension_model(n);
    const std::size_t m = static_cast<std::size_t>(2 * n + 1);
    CHECK(de_rham(*s).dims == Dims{1, 1, m});
    CHECK(d_plus_dlambda_cohomology(*s).dims == Dims{1, m, 1});
    CHECK(dd_lambda_cohomology(*s).dims == Dims{m, 1, m});
  }
}

TEST_CASE("representatives are independent modulo the denominator") {
  const auto s = build_suspension_model(2);
  const auto r = d_plus_dlambda_cohomology(*s, {true, true});
  REQUIRE(r.representatives.has_value());
  for (int k = 0; k <= 2; ++k) {
    const Matrix& reps = r.representatives->at(static_cast<std::size_t>(k));
    CHECK(reps.cols() == r.dims[static_cast<std::size_t>(k)]);
    const Matrix den = k == 0 ? Matrix(s->dim(0), 0) : s->d.block(k - 1) * s->d_lambda.block(k);
    CHECK(quotient_dimension(reps, den) == reps.cols());
  }
  const auto p = build_polynomial_model(1, 6);
  const auto q = dd_lambda_cohomology(*p, {true, true});
  const Matrix rep = q.representatives->at(1);
  REQUIRE(rep.cols() == 1);
  // the class is that of α₁
  const auto alpha = alpha_form(p, 1).form;
  const Matrix den = hstack(p->d.block(0), p->d_lambda.block(2));
  CHECK(quotient_dimension(hstack(rep, Matrix::column_vector(alpha.coords)), den) == 1);
}

TEST_CASE("quotient sanity on every model") {
  for (const auto& m : {build_torus_model(2), build_polynomial_model(1, 6), build_polynomial_model(2, 3),
                        build_suspension_model(3)}) {
    CHECK_MESSAGE(quotient_sanity(*m).all(), m->name);
  }
}

TEST_CASE("reduction constant examples") {
  const auto p1 = build_polynomial_model(1, 4);
  CHECK(reduction_constant(omega_power(p1, 1)) == -1);
  CHECK(reduction_constant(omega_power(p1, 0)) == 1);
  CHECK(reduction_constant(Rational(3) * omega_power(p1, 0)) == 3);
  const auto p2 = build_polynomial_model(2, 4);
  CHECK(reduction_constant(omega_power(p2, 1)) == -2);
  // ⋆ω₀² = 2 with the involutive star, so ω₀² reduces to 2, ω₀²/2 to 1
  CHECK(reduction_constant(omega_power(p2, 2)) == 2);
  CHECK(reduction_constant(Rational(1, 2) * omega_power(p2, 2)) == 1);
  const auto p3 = build_polynomial_model(3, 3);
  // (-1)^k n!/(n-k)!
  CHECK(reduction_constant(omega_power(p3, 1)) == -3);
  CHECK(reduction_constant(omega_power(p3, 2)) == 6);
  CHECK(reduction_constant(omega_power(p3, 3)) == -6);
}

TEST_CASE("reduction constant preconditions") {
  const auto p = build_polynomial_model(1, 4);
  CHECK_THROWS_AS(reduction_constant(alpha_form(p, 1).form), PreconditionError);
  Vector c(p->dim(2));
  c[1] = 1;  // x1 dx1∧dy1 is closed but not coclosed
  CHECK_THROWS_AS(reduction_constant(FormVector(p, 2, c)), PreconditionError);
  CHECK_THROWS_AS(reduction_constant(omega_power(build_torus_model(1), 1)), UnsupportedError);
}

TEST_CASE("reduction constant vanishes on dd^Λ-exact forms and yields a witness") {
  std::mt19937_64 rng(5);
  for (const auto& p : {build_polynomial_model(1, 6), build_polynomial_model(2, 4)}) {
    for (int t = 0; t < 5; ++t)
      for (int k = 2; k <= p->top_degree; k += 2) {
        const auto z = random_form(p, k, rng);
        const auto x = d_apply(d_lambda_apply(z));
        const auto r = reduce(x);
        CHECK(r.constant == 0);
        REQUIRE(r.exactness_witness.has_value());
        CHECK(d_apply(d_lambda_apply(*r.exactness_witness)) == x);
      }
  }
}

TEST_CASE("reduction constant does not depend on the primitive") {
  const auto p1 = build_polynomial_model(1, 6);
  const auto p2 = build_polynomial_model(2, 4);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(reduction_choice_independent(omega_power(p1, 1), seed));
    CHECK(reduction_choice_independent(omega_power(p2, 1), seed));
    CHECK(reduction_choice_independent(omega_power(p2, 2), seed));
  }
  CHECK(reduce(omega_power(p2, 2), 3).chain.size() == 2);
}

TEST_CASE("reduction constant is a monomorphism on windowed even cocycles") {
  // every windowed even cocycle: c_x = 0 exactly when x is dd^Λ-exact
  const auto p = build_polynomial_model(1, 6);
  for (int k : {0, 2}) {
    const Matrix e = window_embedding(*p, k);
    const Matrix op = vstack(k < 2 ? p->d.block(k) : Matrix(0, p->dim(k)), k > 0 ? p->d_lambda.block(k) : Matrix(0, p->dim(k)));
    const Matrix cocycles = e * nullspace(op * e);
    const Matrix exact = k == 0 ? Matrix(p->dim(0), 0) : p->d.block(k - 1) * p->d_lambda.block(k);
    REQUIRE(cocycles.cols() > 0);
    for (std::size_t c = 0; c < cocycles.cols(); ++c) {
      const FormVector x(p, k, cocycles.column(c));
      const bool is_exact = column_space_contains(exact, Matrix::column_vector(x.coords));
      CHECK((reduction_constant(x) == 0) == is_exact);
    }
  }
}

TEST_CASE("hodge check") {
  for (const auto& m : {build_suspension_model(2), build_suspension_model(4), build_torus_model(1)}) {
    const auto h = hodge_check(*m);
    CHECK_MESSAGE(h.all(), m->name);
    for (const auto& d : h.degrees) {
      CHECK(d.matches());
      CHECK(d.exhaustive());
    }
  }
  const auto h = hodge_check(*build_suspension_model(2));
  CHECK(h.degrees[1].kernel_dim == 5);
  CHECK(h.degrees[0].kernel_dim == 1);
  CHECK(hodge_operator(*build_torus_model(1), 1).is_zero());
  CHECK_THROWS_AS(hodge_check(*build_polynomial_model(1, 4)), UnsupportedError);
}

TEST_CASE("hodge operator is self-adjoint for the inner product") {
  const auto s = build_suspension_model(3);
  for (int k = 0; k <= 2; ++k) {
    const Matrix& g = s->inner->at(static_cast<std::size_t>(k));
    const Matrix dk = hodge_operator(*s, k);
    CHECK((g * dk).is_symmetric());
  }
}

TEST_CASE("foliated inequality") {
  auto check = [](const ComplexModel& m) {
    const auto v = inequality_check(de_rham(m), d_plus_dlambda_cohomology(m), dd_lambda_cohomology(m));
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  };
  CHECK(check(*build_suspension_model(2)));
  CHECK(check(*build_polynomial_model(1, 6)));
  CHECK(check(*build_torus_model(1)));
  const auto s = build_suspension_model(2);
  CHECK_THROWS_AS(inequality_check(de_rham(*s), d_plus_dlambda_cohomology(*build_suspension_model(3)),
                                   dd_lambda_cohomology(*s)),
                  PreconditionError);
}
