#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "symplab/algebra_forms.hpp"
#include "symplab/cohomology_engine.hpp"
#include "symplab/reporting.hpp"
#include "symplab/serialization.hpp"

namespace symplab::cli {

namespace {

using cohomology::CohomologyReport;
using Dims = std::vector<std::size_t>;

std::string dims_text(const Dims& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

CriterionResult criterion(int id, std::string title, std::string expected) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.expected = std::move(expected);
  return r;
}

std::string count_text(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

CriterionResult rank_kernel() {
  auto r = criterion(1, "rank/kernel of omega_A on regular elements", "rank 2n^2, dim ker n, ker = centralizer, abelian");
  int ok = 0, total = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto ctx = lie::standard_basis(n);
    std::mt19937_64 rng(1000 + static_cast<unsigned>(n));
    for (int s = 0; s < 50; ++s, ++total) {
      const auto a = lie::random_regular_element(ctx, rng);
      const auto w = forms::omega_from_element(a);
      const auto k = forms::form_kernel(w);
      if (forms::form_rank(w) == static_cast<std::size_t>(2 * n * n) && k.dim() == static_cast<std::size_t>(n) &&
          k == lie::centralizer(a) && lie::is_abelian(k))
        ++ok;
    }
  }
  r.computed = count_text(ok, total) + " samples (n=1,2,3)";
  r.passed = ok == total;
  return r;
}

CriterionResult closed_forms() {
  auto r = criterion(2, "closed 2-forms are exactly the omega_A", "dims 3, 10; 100/100 potential round trips");
  const std::size_t d1 = forms::closed_two_form_dimension(lie::standard_basis(1));
  const std::size_t d2 = forms::closed_two_form_dimension(lie::standard_basis(2));
  int ok = 0;
  for (int n = 1; n <= 2; ++n) {
    const auto ctx = lie::standard_basis(n);
    std::mt19937_64 rng(2000 + static_cast<unsigned>(n));
    for (int s = 0; s < 50; ++s) {
      const auto a = lie::random_element(ctx, rng);
      if (forms::potential_element(forms::omega_from_element(a)) == a) ++ok;
    }
  }
  r.computed = "dims " + std::to_string(d1) + ", " + std::to_string(d2) + "; " + count_text(ok, 100) + " round trips";
  r.passed = d1 == 3 && d2 == 10 && ok == 100;
  return r;
}

CriterionResult quotient() {
  auto r = criterion(3, "reduced form on g/z_A is nondegenerate", "det != 0 for every sample");
  int ok = 0, total = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto ctx = lie::standard_basis(n);
    std::mt19937_64 rng(3000 + static_cast<unsigned>(n));
    for (int s = 0; s < 20; ++s, ++total)
      if (forms::quotient_form(lie::random_regular_element(ctx, rng)).nondegenerate()) ++ok;
  }
  r.computed = count_text(ok, total) + " nondegenerate (n=1,2,3)";
  r.passed = ok == total;
  return r;
}

CriterionResult spectral() {
  auto r = criterion(4, "spectral types in sp(2,R)", "J elliptic, H hyperbolic, E parabolic/defective");
  const auto ctx = lie::standard_basis(1);
  const auto j = lie::spectral_type(lie::AlgebraElement::from_matrix(ctx, lie::standard_j(1))).label;
  const auto h = lie::spectral_type(lie::AlgebraElement::basis_element(ctx, 0)).label;
  const auto e = lie::spectral_type(lie::AlgebraElement::basis_element(ctx, 1)).label;
  r.computed = "J " + j + ", H " + h + ", E " + e;
  r.passed = j == "elliptic" && h == "hyperbolic" && e == "parabolic/defective";
  return r;
}

std::vector<model::ModelPtr> identity_models() {
  return {model::build_torus_model(1),        model::build_torus_model(2),        model::build_polynomial_model(1, 4),
          model::build_polynomial_model(1, 6), model::build_polynomial_model(1, 8), model::build_suspension_model(2),
          model::build_suspension_model(4),    model::build_suspension_model(8)};
}

CriterionResult kunneth() {
  auto r = criterion(6, "polynomial model n=1, windowed", "H_{d+dL} (1,0,1), H_{ddL} (0,1,0) for D=4,6,8");
  bool ok = true;
  std::string computed;
  for (int cutoff : {4, 6, 8}) {
    const auto p = model::build_polynomial_model(1, cutoff);
    const auto a = cohomology::d_plus_dlambda_cohomology(*p).dims;
    const auto b = cohomology::dd_lambda_cohomology(*p).dims;
    ok = ok && a == Dims{1, 0, 1} && b == Dims{0, 1, 0};
    computed += (computed.empty() ? "" : "; ") + std::string("D=") + std::to_string(cutoff) + " " + dims_text(a) + " " +
                dims_text(b);
  }
  r.computed = computed;
  r.passed = ok;
  return r;
}

CriterionResult reduction() {
  auto r = criterion(7, "reduction constant", "c(w0)=-1 (n=1), c(w0^2)=+1 (n=2), c(dd^L z)=0 on 10 z");
  const auto p1 = model::build_polynomial_model(1, 6);
  const auto p2 = model::build_polynomial_model(2, 4);
  const Rational c1 = cohomology::reduction_constant(model::omega_power(p1, 1));
  const Rational c2 = cohomology::reduction_constant(model::omega_power(p2, 2));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-4, 4);
  int zeros = 0;
  for (int t = 0; t < 10; ++t) {
    const auto& p = t < 5 ? p1 : p2;
    const int k = t < 5 ? 2 : 2 + 2 * (t % 2);
    Vector c(p->dim(k));
    for (auto& x : c) x = dist(rng);
    const model::FormVector z(p, k, c);
    const auto x = model::d_apply(model::d_lambda_apply(z));
    const auto red = cohomology::reduce(x);
    if (red.constant == 0 && red.exactness_witness) ++zeros;
  }
  const Rational divided = cohomology::reduction_constant(Rational(1, 2) * model::omega_power(p2, 2));
  r.computed = "c(w0)=" + to_string(c1) + ", c(w0^2)=" + to_string(c2) + " (sign (-1)^k holds; the involutive star has " +
               "star(w0^2)=2, c(w0^2/2)=" + to_string(divided) + "), " + count_text(zeros, 10) + " exact z -> 0";
  r.passed = c1 == -1 && c2 == 1 && zeros == 10;
  return r;
}

CriterionResult suspension() {
  auto r = criterion(8, "suspension of L=[[1,1],[0,1]]", "dR (1,1,2N+1), d+dL (1,2N+1,1), ddL (2N+1,1,2N+1)");
  bool ok = true;
  std::string computed;
  for (int n : {2, 4, 8}) {
    const auto s = model::build_suspension_model(n);
    const std::size_t m = static_cast<std::size_t>(2 * n + 1);
    const auto a = cohomology::de_rham(*s).dims;
    const auto b = cohomology::d_plus_dlambda_cohomology(*s).dims;
    const auto c = cohomology::dd_lambda_cohomology(*s).dims;
    ok = ok && a == Dims{1, 1, m} && b == Dims{1, m, 1} && c == Dims{m, 1, m};
    computed += (computed.empty() ? "" : "; ") + std::string("N=") + std::to_string(n) + " " + dims_text(a) + " " +
                dims_text(b) + " " + dims_text(c);
  }
  r.computed = computed;
  r.passed = ok;
  return r;
}

CriterionResult hodge() {
  auto r = criterion(9, "finite Hodge check", "dim ker D = dim H_{d+dL}, decomposition exhaustive");
  bool ok = true;
  std::string computed;
  for (const auto& m : {model::build_suspension_model(2), model::build_suspension_model(4), model::build_torus_model(1)}) {
    const auto h = cohomology::hodge_check(*m);
    Dims ker;
    for (const auto& d : h.degrees) ker.push_back(d.kernel_dim);
    ok = ok && h.all();
    computed += (computed.empty() ? "" : "; ") + m->name + " ker D " + dims_text(ker) + (h.all() ? " ok" : " MISMATCH");
  }
  r.computed = computed;
  r.passed = ok;
  return r;
}

CriterionResult inequality() {
  auto r = criterion(10, "dim H_dR <= dim H_{d+dL} + dim H_{ddL}", "true in every degree");
  int ok = 0, total = 0;
  std::vector<model::ModelPtr> models;
  for (int cutoff : {4, 6, 8}) models.push_back(model::build_polynomial_model(1, cutoff));
  for (int n : {2, 4, 8}) models.push_back(model::build_suspension_model(n));
  for (const auto& m : models) {
    const auto v = cohomology::inequality_check(cohomology::de_rham(*m), cohomology::d_plus_dlambda_cohomology(*m),
                                                cohomology::dd_lambda_cohomology(*m));
    for (bool b : v) {
      ++total;
      ok += b ? 1 : 0;
    }
  }
  r.computed = count_text(ok, total) + " degrees over 6 models";
  r.passed = ok == total;
  return r;
}

CriterionResult kahler() {
  auto r = criterion(11, "torus constants: theories agree", "identical dims for n=1,2");
  bool ok = true;
  std::string computed;
  for (int n = 1; n <= 2; ++n) {
    const auto t = model::build_torus_model(n);
    const auto a = cohomology::de_rham(*t).dims;
    const auto b = cohomology::d_plus_dlambda_cohomology(*t).dims;
    const auto c = cohomology::dd_lambda_cohomology(*t).dims;
    ok = ok && a == b && b == c;
    computed += (computed.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + " " + dims_text(a) + " " +
                dims_text(b) + " " + dims_text(c);
  }
  r.computed = computed;
  r.passed = ok;
  return r;
}

}  // namespace

CriterionResult check_operator_identities(const std::vector<model::ModelPtr>& models) {
  auto r = criterion(5, "operator identities", "d^2=0, (d^L)^2=0, star^2=id, dd^L+d^Ld=0 on every model");
  std::vector<std::string> failures;
  for (const auto& m : models) {
    const auto rep = model::verify_identities(*m);
    if (!rep.shapes_ok) {
      failures.push_back(m->name + ": block shapes");
      continue;
    }
    for (const auto& d : rep.degrees) {
      std::string what;
      if (!d.d_squared) what += " d^2";
      if (!d.d_lambda_squared) what += " (d^L)^2";
      if (!d.star_involution) what += " star^2";
      if (!d.codifferential_definition) what += " d^L definition";
      if (!d.anticommutation) what += " dd^L+d^Ld";
      if (!what.empty()) failures.push_back(m->name + " degree " + std::to_string(d.degree) + ":" + what);
    }
  }
  r.passed = failures.empty();
  if (r.passed) {
    r.computed = "all hold on " + std::to_string(models.size()) + " models";
  } else {
    r.computed = "failed:";
    for (const auto& f : failures) r.computed += " [" + f + "]";
  }
  return r;
}

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, 60, rank_kernel},
      {2, 30, closed_forms},
      {3, 30, quotient},
      {4, 1, spectral},
      {5, 60, [] { return check_operator_identities(identity_models()); }},
      {6, 120, kunneth},
      {7, 60, reduction},
      {8, 60, suspension},
      {9, 60, hodge},
      {10, 10, inequality},
      {11, 10, kahler},
  };
}

CriterionResult run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c.body();
  } catch (const std::exception& e) {
    r.id = c.id;
    r.computed = std::string("error: ") + e.what();
    r.passed = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.limit_seconds = c.limit_seconds;
  return r;
}

std::vector<CriterionResult> run_suite() {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) out.push_back(run_criterion(c));
  return out;
}

std::string suite_table(const std::vector<CriterionResult>& results) {
  std::ostringstream s;
  for (const auto& r : results) {
    s << (r.ok() ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << "  " << r.title << " | expected: " << r.expected
      << " | computed: " << r.computed << " | " << std::fixed << std::setprecision(2) << r.seconds << "s (limit "
      << std::setprecision(0) << r.limit_seconds << "s)";
    if (r.passed && !r.within_limit()) s << " over time limit";
    s << "\n";
  }
  return s.str();
}

std::string suite_json(const std::vector<CriterionResult>& results) {
  io::Json rows = io::Json::array();
  bool all = true;
  for (const auto& r : results) {
    rows.push_back(io::Json{{"id", r.id},
                            {"title", r.title},
                            {"expected", r.expected},
                            {"computed", r.computed},
                            {"passed", r.passed},
                            {"within_limit", r.within_limit()}});
    all = all && r.ok();
  }
  return io::Json{{"command", "suite"}, {"criteria", rows}, {"all_pass", all}}.dump(2) + "\n";
}

}  // namespace symplab::cli
