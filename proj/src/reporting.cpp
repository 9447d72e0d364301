#include "symplab/reporting.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "symplab/algebra_forms.hpp"
#include "symplab/cohomology_engine.hpp"
#include "symplab/serialization.hpp"

namespace symplab::cli {

using io::Json;

std::string error_record(const std::string& op, const std::string& reason) {
  return Json{{"op", op}, {"reason", reason}}.dump();
}

namespace {

const std::vector<std::string> kTheories{"dr", "dpl", "ddl", "hodge"};
const std::vector<std::string> kChecks{"rank-kernel", "potential", "quotient", "closed-space", "basis", "spectral"};
const std::vector<std::string> kModels{"torus", "polynomial", "suspension"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

int default_cutoff(const std::string& kind) { return kind == "polynomial" ? 6 : kind == "suspension" ? 2 : 0; }

std::string command_name(Command c) {
  switch (c) {
    case Command::Algebra:
      return "algebra";
    case Command::Omega:
      return "omega";
    case Command::Cohomology:
      return "cohomology";
    case Command::Suite:
      return "suite";
  }
  return "unknown";
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.n < 1) throw UsageError("--n must be at least 1");
  if (c.cutoff < 0) throw UsageError("--cutoff must be at least 1");
  switch (c.command) {
    case Command::Algebra:
      if (!contains(kChecks, c.check)) throw UsageError("unknown --check " + c.check);
      if (c.samples < 1) throw UsageError("--samples must be at least 1");
      break;
    case Command::Omega:
      if (c.element.empty()) throw UsageError("--element is required");
      break;
    case Command::Cohomology:
      if (!contains(kModels, c.model)) throw UsageError("unknown --model " + c.model);
      if (c.theories.empty()) throw UsageError("--theories must not be empty");
      for (const auto& t : c.theories)
        if (!contains(kTheories, t)) throw UsageError("unknown theory " + t);
      if (c.model == "polynomial" && c.cutoff == 1) throw UsageError("polynomial cutoff must be at least 2");
      if (c.format == OutputFormat::Csv && c.representatives) {
        throw UsageError("--representatives needs --format json");
      }
      break;
    case Command::Suite:
      break;
  }
}

model::ModelPtr build_model(const std::string& kind, int n, int cutoff) {
  const int c = cutoff > 0 ? cutoff : default_cutoff(kind);
  if (kind == "torus") return model::build_torus_model(n);
  if (kind == "polynomial") return model::build_polynomial_model(n, c);
  if (kind == "suspension") return model::build_suspension_model(c);
  throw UsageError("unknown model " + kind);
}

namespace {

std::string default_file_name(const RunConfig& c) {
  const std::string ext = c.format == OutputFormat::Csv ? ".csv" : ".json";
  switch (c.command) {
    case Command::Algebra:
      return "algebra_n" + std::to_string(c.n) + "_" + c.check + ext;
    case Command::Omega:
      return "omega_n" + std::to_string(c.n) + ext;
    case Command::Cohomology:
      return "cohomology_" + build_model(c.model, c.n, c.cutoff)->name + ext;
    case Command::Suite:
      return "suite.json";
  }
  return "report" + ext;
}

std::string rational_text(const Rational& r) { return to_string(r); }

Json coords_json(const lie::AlgebraElement& a) { return io::vector_to_json(a.coords()); }

std::string run_algebra(const RunConfig& c) {
  const auto ctx = lie::standard_basis(c.n);
  std::mt19937_64 rng(c.seed);
  Json out{{"command", "algebra"}, {"n", c.n}, {"check", c.check}, {"seed", c.seed}};
  bool all = true;
  if (c.check == "rank-kernel" || c.check == "potential" || c.check == "quotient") {
    Json samples = Json::array();
    for (int s = 0; s < c.samples; ++s) {
      Json row;
      if (c.check == "rank-kernel") {
        const auto a = lie::random_regular_element(ctx, rng);
        const auto w = forms::omega_from_element(a);
        const auto k = forms::form_kernel(w);
        const std::size_t rk = forms::form_rank(w);
        const bool regular = lie::is_regular(a);
        const bool ab = lie::is_abelian(k);
        const bool eq = k == lie::centralizer(a);
        const bool ok = regular && ab && eq && rk == static_cast<std::size_t>(2 * c.n * c.n) &&
                        k.dim() == static_cast<std::size_t>(c.n);
        row = Json{{"element", coords_json(a)}, {"regular", regular}, {"rank", rk}, {"kernel_dim", k.dim()},
                   {"kernel_abelian", ab}, {"kernel_equals_centralizer", eq}, {"pass", ok}};
        all = all && ok;
      } else if (c.check == "potential") {
        const auto a = lie::random_element(ctx, rng);
        const auto w = forms::omega_from_element(a);
        const bool closed = forms::is_closed_2form(w);
        const auto p = forms::potential_element(w);
        const bool ok = closed && p == a;
        row = Json{{"element", coords_json(a)}, {"closed", closed}, {"potential", coords_json(p)}, {"roundtrip", ok}};
        all = all && ok;
      } else {
        const auto a = lie::random_regular_element(ctx, rng);
        const auto q = forms::quotient_form(a);
        row = Json{{"element", coords_json(a)}, {"reduced_dim", q.reduced_gram.rows()},
                   {"determinant", rational_text(q.determinant)}, {"nondegenerate", q.nondegenerate()}};
        all = all && q.nondegenerate();
      }
      samples.push_back(std::move(row));
    }
    out["samples"] = std::move(samples);
  } else if (c.check == "closed-space") {
    const std::size_t dim = forms::closed_two_form_dimension(ctx);
    const std::size_t expect = static_cast<std::size_t>(2 * c.n * c.n + c.n);
    out["dimension"] = dim;
    out["expected"] = expect;
    all = dim == expect;
  } else if (c.check == "basis") {
    out["dimension"] = ctx->dim();
    out["labels"] = ctx->basis_labels();
    out["killing_trace_ratio"] = rational_text(ctx->killing_trace_ratio());
  } else if (c.check == "spectral") {
    Json types = Json::array();
    auto add = [&](const std::string& name, const lie::AlgebraElement& a) {
      const auto r = lie::spectral_type(a);
      types.push_back(Json{{"element", name},
                           {"coords", coords_json(a)},
                           {"label", r.label},
                           {"real_pairs", r.real_pairs},
                           {"imaginary_pairs", r.imaginary_pairs},
                           {"complex_quadruples", r.complex_quadruples}});
    };
    add("J", lie::AlgebraElement::from_matrix(ctx, lie::standard_j(c.n)));
    for (int s = 0; s < c.samples; ++s) add("sample" + std::to_string(s), lie::random_element(ctx, rng));
    out["types"] = std::move(types);
  }
  out["all_pass"] = all;
  return out.dump(2) + "\n";
}

std::string run_omega(const RunConfig& c) {
  const Matrix m = io::parse_matrix_text(c.element);
  if (m.rows() != static_cast<std::size_t>(2 * c.n)) throw ShapeError("omega", "element must be a 2n x 2n matrix");
  const auto ctx = lie::standard_basis(c.n);
  const auto a = lie::AlgebraElement::from_matrix(ctx, m);
  const auto r = forms::analyze(forms::omega_from_element(a));
  Json out{{"command", "omega"},
           {"n", c.n},
           {"element", coords_json(a)},
           {"rank", r.rank},
           {"kernel_dim", r.kernel_dim},
           {"closed", r.closed},
           {"potential_roundtrip", r.potential_roundtrip},
           {"regular", lie::is_regular(a)}};
  if (r.potential) out["potential"] = coords_json(*r.potential);
  return out.dump(2) + "\n";
}

std::string run_cohomology(const RunConfig& c) {
  const auto m = build_model(c.model, c.n, c.cutoff);
  if (c.bundle) {
    std::ofstream f(*c.bundle);
    if (!f) throw PreconditionError("cohomology", "cannot write bundle " + *c.bundle);
    f << io::model_to_json(*m).dump() << "\n";
  }
  const cohomology::CohomologyOptions opt{c.windowed, c.representatives};
  std::vector<cohomology::CohomologyReport> reports;
  std::optional<cohomology::HodgeReport> hodge;
  for (const auto& t : c.theories) {
    if (t == "dr") reports.push_back(cohomology::de_rham(*m, opt));
    else if (t == "dpl") reports.push_back(cohomology::d_plus_dlambda_cohomology(*m, opt));
    else if (t == "ddl") reports.push_back(cohomology::dd_lambda_cohomology(*m, opt));
    else if (t == "hodge") hodge = cohomology::hodge_check(*m);
  }
  if (c.format == OutputFormat::Csv) return io::reports_to_csv(reports, hodge ? &*hodge : nullptr);
  Json out{{"command", "cohomology"}, {"model", m->name}};
  Json dims = Json::array();
  for (int k = 0; k <= m->top_degree; ++k) dims.push_back(m->dim(k));
  out["space_dims"] = dims;
  Json rs = Json::array();
  for (const auto& r : reports) rs.push_back(io::report_to_json(r));
  out["reports"] = rs;
  const auto find = [&](cohomology::Theory t) -> const cohomology::CohomologyReport* {
    for (const auto& r : reports)
      if (r.theory == t) return &r;
    return nullptr;
  };
  const auto* dr = find(cohomology::Theory::DeRham);
  const auto* dpl = find(cohomology::Theory::DPlusDLambda);
  const auto* ddl = find(cohomology::Theory::DDLambda);
  if (dr && dpl && ddl) out["inequality"] = cohomology::inequality_check(*dr, *dpl, *ddl);
  if (hodge) out["hodge"] = io::hodge_to_json(*hodge);
  return out.dump(2) + "\n";
}

}  // namespace

std::optional<std::string> resolve_output_path(const RunConfig& c) {
  namespace fs = std::filesystem;
  if (const char* dir = std::getenv("LAB_OUTPUT_DIR"); dir && *dir) {
    const std::string name = c.output ? fs::path(*c.output).filename().string() : default_file_name(c);
    return (fs::path(dir) / name).string();
  }
  return c.output;
}

RunResult run(const RunConfig& config) {
  RunResult r;
  try {
    validate(config);
    switch (config.command) {
      case Command::Algebra:
        r.text = run_algebra(config);
        break;
      case Command::Omega:
        r.text = run_omega(config);
        break;
      case Command::Cohomology:
        r.text = run_cohomology(config);
        break;
      case Command::Suite: {
        const auto results = run_suite();
        r.text = suite_json(results);
        r.summary = suite_table(results);
        if (!std::all_of(results.begin(), results.end(), [](const CriterionResult& c) { return c.ok(); })) {
          r.exit_code = 1;
          r.error = error_record("suite", "one or more acceptance criteria failed");
        }
        break;
      }
    }
    if (const auto path = resolve_output_path(config)) {
      std::filesystem::path p(*path);
      if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
      std::ofstream f(p, std::ios::binary);
      if (!f) throw PreconditionError(command_name(config.command), "cannot write " + *path);
      f << r.text;
      r.written_path = *path;
    }
  } catch (const UsageError& e) {
    r.exit_code = 2;
    r.error = error_record(e.op(), e.reason());
  } catch (const Error& e) {
    r.exit_code = 1;
    r.error = error_record(e.op(), e.reason());
  } catch (const std::exception& e) {
    r.exit_code = 1;
    r.error = error_record(command_name(config.command), e.what());
  }
  return r;
}

}  // namespace symplab::cli
