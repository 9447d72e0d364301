#include "symplab/cohomology_engine.hpp"

#include <algorithm>
#include <random>

#include "symplab/errors.hpp"

namespace symplab::cohomology {

using model::Primitive;

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::DeRham:
      return "deRham";
    case Theory::DPlusDLambda:
      return "dPlusDLambda";
    case Theory::DDLambda:
      return "ddLambda";
  }
  return "unknown";
}

namespace {

// operators as maps into degree k or out of degree k; zero-size blocks when
// the neighbouring degree does not exist
Matrix d_from(const ComplexModel& m, int k) {
  if (k < 0 || k > m.top_degree) return Matrix(m.dim(k + 1), 0);
  return m.d.block(k);
}

Matrix dl_from(const ComplexModel& m, int k) {
  if (k < 0 || k > m.top_degree) return Matrix(m.dim(k - 1), 0);
  return m.d_lambda.block(k);
}

// d d^Λ restricted to degree k
Matrix ddl(const ComplexModel& m, int k) {
  if (k == 0) return Matrix(m.dim(0), m.dim(0));
  return m.d.block(k - 1) * m.d_lambda.block(k);
}

// columns of the numerator kernel, restricted to the window when requested
Matrix kernel_in_window(const ComplexModel& m, int k, const Matrix& op, bool use_window) {
  if (use_window && m.window) {
    const Matrix e = model::window_embedding(m, k);
    return e * nullspace(op * e);
  }
  return nullspace(op);
}

Matrix representatives_of(const Matrix& num, const Matrix& den) {
  std::vector<Vector> picked;
  Matrix acc = den;
  std::size_t r = rank(acc);
  for (std::size_t c = 0; c < num.cols(); ++c) {
    Matrix next = hstack(acc, Matrix::column_vector(num.column(c)));
    const std::size_t nr = rank(next);
    if (nr > r) {
      picked.push_back(num.column(c));
      acc = std::move(next);
      r = nr;
    }
  }
  return Matrix::from_columns(num.rows(), picked);
}

template <class Num, class Den>
CohomologyReport run(const ComplexModel& m, Theory t, const CohomologyOptions& opt, Num numerator_op, Den denominator) {
  CohomologyReport r;
  r.model = m.name;
  r.theory = t;
  r.windowed = opt.use_window && m.window.has_value();
  if (opt.representatives) r.representatives.emplace();
  for (int k = 0; k <= m.top_degree; ++k) {
    const Matrix num = kernel_in_window(m, k, numerator_op(k), opt.use_window);
    const Matrix den = denominator(k);
    r.dims.push_back(quotient_dimension(num, den));
    if (opt.representatives) r.representatives->push_back(representatives_of(num, den));
  }
  return r;
}

}  // namespace

CohomologyReport de_rham(const ComplexModel& m, const CohomologyOptions& opt) {
  return run(
      m, Theory::DeRham, opt, [&](int k) { return d_from(m, k); }, [&](int k) { return d_from(m, k - 1); });
}

CohomologyReport d_plus_dlambda_cohomology(const ComplexModel& m, const CohomologyOptions& opt) {
  return run(
      m, Theory::DPlusDLambda, opt, [&](int k) { return vstack(d_from(m, k), dl_from(m, k)); },
      [&](int k) { return ddl(m, k); });
}

CohomologyReport dd_lambda_cohomology(const ComplexModel& m, const CohomologyOptions& opt) {
  return run(
      m, Theory::DDLambda, opt, [&](int k) { return ddl(m, k); },
      [&](int k) { return hstack(d_from(m, k - 1), dl_from(m, k + 1)); });
}

CohomologyReport compute(Theory t, const ComplexModel& m, const CohomologyOptions& opt) {
  switch (t) {
    case Theory::DeRham:
      return de_rham(m, opt);
    case Theory::DPlusDLambda:
      return d_plus_dlambda_cohomology(m, opt);
    case Theory::DDLambda:
      return dd_lambda_cohomology(m, opt);
  }
  throw UnsupportedError("compute", "unknown theory");
}

bool QuotientSanity::all() const {
  auto ok = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return ok(dpl_denominator_in_numerator) && ok(ddl_denominator_in_numerator);
}

QuotientSanity quotient_sanity(const ComplexModel& m) {
  QuotientSanity s;
  for (int k = 0; k <= m.top_degree; ++k) {
    const Matrix a = ddl(m, k);
    s.dpl_denominator_in_numerator.push_back((d_from(m, k) * a).is_zero() && (dl_from(m, k) * a).is_zero());
    const Matrix den = hstack(d_from(m, k - 1), dl_from(m, k + 1));
    s.ddl_denominator_in_numerator.push_back((ddl(m, k) * den).is_zero());
  }
  return s;
}

namespace {

FormVector seeded_perturbation(const model::ModelPtr& mp, int degree, std::uint64_t seed) {
  // a windowed form of the given degree; its d is added to the first primitive
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  Vector c(mp->dim(degree));
  const auto& layout = *mp->polynomial;
  const std::size_t de = layout.exterior.dim(degree);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (layout.monomial_degree(i / de) <= layout.cutoff - 2) c[i] = dist(rng);
  return {mp, degree, std::move(c)};
}

}  // namespace

Reduction reduce(const FormVector& x, std::optional<std::uint64_t> perturbation_seed) {
  const auto& mp = x.model;
  if (!mp || mp->kind != model::ModelKind::Polynomial || !mp->polynomial) {
    throw UnsupportedError("reduction_constant", "only available on polynomial models");
  }
  if (x.degree < 0 || x.degree > mp->top_degree) throw DegreeError("reduction_constant", "degree out of range");
  if (x.degree % 2 != 0) throw PreconditionError("reduction_constant", "degree must be even");
  if (!model::d_apply(x).is_zero() || !model::d_lambda_apply(x).is_zero()) {
    throw PreconditionError("reduction_constant", "input is not a (d + d^Λ)-cocycle");
  }
  Reduction r;
  if (x.degree == 0) {
    // a d-closed polynomial function is its constant term
    r.constant = x.coords[0];
    return r;
  }
  FormVector y = model::poincare_antiderivative(x, Primitive::D);
  if (perturbation_seed) y = y + model::d_apply(seeded_perturbation(mp, y.degree - 1, *perturbation_seed));
  r.chain.push_back(y);
  while (y.degree > 1) {
    y = model::poincare_antiderivative(model::d_lambda_apply(y), Primitive::D);
    r.chain.push_back(y);
  }
  const FormVector c = model::d_lambda_apply(y);
  for (std::size_t i = 1; i < c.coords.size(); ++i)
    if (sgn(c.coords[i]) != 0) throw PreconditionError("reduction_constant", "final codifferential is not constant");
  r.constant = c.coords[0];

  if (sgn(r.constant) == 0) {
    // y_1 is d^Λ-closed: y_1 = d^Λ β_2, then y'_3 = y_3 + dβ_2 is d^Λ-closed, ...
    FormVector beta = model::poincare_antiderivative(r.chain.back(), Primitive::DLambda);
    for (std::size_t i = r.chain.size() - 1; i-- > 0;) {
      const FormVector shifted = r.chain[i] + model::d_apply(beta);
      beta = model::poincare_antiderivative(shifted, Primitive::DLambda);
    }
    if (!(model::d_apply(model::d_lambda_apply(beta)) == x)) {
      throw PreconditionError("reduction_constant", "exactness witness check failed");
    }
    r.exactness_witness = beta;
  }
  return r;
}

Rational reduction_constant(const FormVector& x) { return reduce(x).constant; }

bool reduction_choice_independent(const FormVector& x, std::uint64_t seed) {
  return reduce(x).constant == reduce(x, seed).constant;
}

namespace {

Matrix adjoint(const Matrix& p, const Matrix& g_src_inv, const Matrix& g_tgt) {
  return g_src_inv * p.transpose() * g_tgt;
}

}  // namespace

Matrix hodge_operator(const ComplexModel& m, int k) {
  if (!m.inner) throw UnsupportedError("hodge_check", "model has no inner product");
  const int top = m.top_degree;
  if (k < 0 || k > top) throw DegreeError("hodge_check", "degree out of range");
  const auto& g = *m.inner;
  auto gram = [&](int j) { return g.at(static_cast<std::size_t>(j)); };
  std::vector<Matrix> ginv;
  for (int j = 0; j <= top; ++j) ginv.push_back(inverse(gram(j)));
  auto gi = [&](int j) -> const Matrix& { return ginv.at(static_cast<std::size_t>(j)); };

  const std::size_t n = m.dim(k);
  Matrix total(n, n);
  const Matrix a = ddl(m, k);
  const Matrix a_star = adjoint(a, gi(k), gram(k));
  total += a * a_star;
  total += a_star * a;
  if (k + 2 <= top) {
    // d* d^Λ d^Λ* d on degree k: k -> k+1 -> k+2 -> k+1 -> k
    const Matrix& d = m.d.block(k);
    const Matrix& l = m.d_lambda.block(k + 2);
    const Matrix d_star = adjoint(d, gi(k), gram(k + 1));
    const Matrix l_star = adjoint(l, gi(k + 2), gram(k + 1));
    total += d_star * l * l_star * d;
  }
  if (k - 2 >= 0) {
    // d^Λ* d d* d^Λ: k -> k-1 -> k-2 -> k-1 -> k
    const Matrix& l = m.d_lambda.block(k);
    const Matrix& d = m.d.block(k - 2);
    const Matrix l_star = adjoint(l, gi(k), gram(k - 1));
    const Matrix d_star = adjoint(d, gi(k - 2), gram(k - 1));
    total += l_star * d * d_star * l;
  }
  if (k < top) {
    const Matrix& d = m.d.block(k);
    total += adjoint(d, gi(k), gram(k + 1)) * d;
  }
  if (k > 0) {
    const Matrix& l = m.d_lambda.block(k);
    total += adjoint(l, gi(k), gram(k - 1)) * l;
  }
  return total;
}

bool HodgeReport::all() const {
  return !degrees.empty() &&
         std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.matches() && d.exhaustive(); });
}

HodgeReport hodge_check(const ComplexModel& m) {
  if (!m.inner) throw UnsupportedError("hodge_check", "model has no inner product");
  const auto& g = *m.inner;
  const auto h = d_plus_dlambda_cohomology(m, {false, false});
  HodgeReport r;
  r.model = m.name;
  for (int k = 0; k <= m.top_degree; ++k) {
    HodgeReport::Degree deg;
    deg.degree = k;
    deg.dimension = m.dim(k);
    const Matrix ker = nullspace(hodge_operator(m, k));
    deg.kernel_dim = ker.cols();
    deg.cohomology_dim = h.dims[static_cast<std::size_t>(k)];
    const Matrix a = ddl(m, k);
    deg.exact_rank = rank(a);
    // d* from degree k+1 and d^Λ* from degree k-1, both landing in degree k
    const Matrix gk_inv = inverse(g[static_cast<std::size_t>(k)]);
    Matrix co(m.dim(k), 0);
    if (k < m.top_degree) co = hstack(co, adjoint(m.d.block(k), gk_inv, g[static_cast<std::size_t>(k + 1)]));
    if (k > 0) co = hstack(co, adjoint(m.d_lambda.block(k), gk_inv, g[static_cast<std::size_t>(k - 1)]));
    deg.coexact_rank = rank(co);
    deg.spans = rank(hstack(hstack(ker, a), co)) == deg.dimension;
    r.degrees.push_back(deg);
  }
  return r;
}

std::vector<bool> inequality_check(const CohomologyReport& dr, const CohomologyReport& dpl,
                                   const CohomologyReport& ddl_report) {
  if (dr.model != dpl.model || dr.model != ddl_report.model) {
    throw PreconditionError("inequality_check", "reports come from different models");
  }
  if (dr.windowed != dpl.windowed || dr.windowed != ddl_report.windowed) {
    throw PreconditionError("inequality_check", "reports use different windowing");
  }
  if (dr.dims.size() != dpl.dims.size() || dr.dims.size() != ddl_report.dims.size()) {
    throw ShapeError("inequality_check", "reports have different degree ranges");
  }
  std::vector<bool> out;
  for (std::size_t k = 0; k < dr.dims.size(); ++k) out.push_back(dr.dims[k] <= dpl.dims[k] + ddl_report.dims[k]);
  return out;
}

}  // namespace symplab::cohomology
