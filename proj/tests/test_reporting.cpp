#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "symplab/reporting.hpp"
#include "symplab/serialization.hpp"

using namespace symplab;
using namespace symplab::cli;
using io::Json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("symplab_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

RunConfig cohomology_config(const std::string& model, int cutoff, std::vector<std::string> theories) {
  RunConfig c;
  c.command = Command::Cohomology;
  c.model = model;
  c.cutoff = cutoff;
  c.theories = std::move(theories);
  return c;
}

int run_lab(const std::string& args, const fs::path& out_dir) {
  const std::string cmd = "LAB_OUTPUT_DIR='" + out_dir.string() + "' '" LAB_BINARY "' " + args + " > '" +
                          (out_dir / "stdout.txt").string() + "' 2> '" + (out_dir / "stderr.txt").string() + "'";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("rational and matrix JSON round trip") {
  const Matrix m{{Rational(1, 3), 0}, {-2, Rational(-7, 4)}};
  const Json j = io::matrix_to_json(m);
  CHECK(j["entries"][0][0] == "1/3");
  CHECK(j["entries"][1][1] == "-7/4");
  CHECK(j["entries"][1][0] == "-2");
  CHECK(io::matrix_from_json(Json::parse(j.dump())) == m);
  CHECK(io::rational_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(Json{{"rows", 2}, {"cols", 1}, {"entries", Json::array()}}), ParseError);
  CHECK(io::parse_matrix_text("[[\"1\",\"0\"],[\"0\",\"-1\"]]") == Matrix{{1, 0}, {0, -1}});
  CHECK_THROWS_AS(io::parse_matrix_text("[[1,2],[3]]"), ShapeError);
  CHECK_THROWS_AS(io::parse_matrix_text("not json"), ParseError);
}

TEST_CASE("model bundle round trip preserves cohomology") {
  for (const auto& m : {model::build_suspension_model(2), model::build_polynomial_model(1, 4), model::build_torus_model(2)}) {
    const Json bundle = io::model_to_json(*m);
    CHECK(bundle.contains("d_blocks"));
    CHECK(bundle.contains("star_blocks"));
    CHECK(bundle.contains("window"));
    const auto back = io::model_from_json(Json::parse(bundle.dump()));
    CHECK(back->name == m->name);
    CHECK(model::verify_identities(*back).all());
    for (int k = 0; k <= m->top_degree; ++k) CHECK(back->d_lambda.block(k) == m->d_lambda.block(k));
    CHECK(cohomology::d_plus_dlambda_cohomology(*back).dims == cohomology::d_plus_dlambda_cohomology(*m).dims);
    CHECK(cohomology::dd_lambda_cohomology(*back).dims == cohomology::dd_lambda_cohomology(*m).dims);
    CHECK(io::model_to_json(*back).dump() == bundle.dump());
  }
  Json broken = io::model_to_json(*model::build_torus_model(1));
  broken["dims"] = Json::array({1, 3, 1});
  CHECK_THROWS_AS(io::model_from_json(broken), ShapeError);
}

TEST_CASE("form vector round trip") {
  const auto p = model::build_polynomial_model(1, 3);
  const auto a = model::alpha_form(p, 1).form;
  const Json j = io::form_to_json(a);
  CHECK(j["degree"] == 1);
  CHECK(io::form_from_json(Json::parse(j.dump()), p) == a);
  CHECK_THROWS_AS(io::form_from_json(Json{{"degree", 1}, {"coords", Json::array({"1"})}}, p), ShapeError);
}

TEST_CASE("csv report format") {
  const auto s = model::build_suspension_model(2);
  const auto h = cohomology::hodge_check(*s);
  const std::string csv = io::reports_to_csv({cohomology::de_rham(*s), cohomology::dd_lambda_cohomology(*s)}, &h);
  CHECK(csv.rfind("model,theory,degree,dimension,windowed\n", 0) == 0);
  CHECK(csv.find("suspension_N2,deRham,2,5,false\n") != std::string::npos);
  CHECK(csv.find("suspension_N2,ddLambda,0,5,false\n") != std::string::npos);
  CHECK(csv.find("suspension_N2,hodgeKernel,1,5,false\n") != std::string::npos);
}

TEST_CASE("run: cohomology csv for the suspension at N=8") {
  auto c = cohomology_config("suspension", 8, {"dr", "dpl", "ddl", "hodge"});
  c.format = OutputFormat::Csv;
  const auto r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.text.find("suspension_N8,deRham,2,17,false") != std::string::npos);
  CHECK(r.text.find("suspension_N8,dPlusDLambda,1,17,false") != std::string::npos);
  CHECK(r.text.find("suspension_N8,ddLambda,1,1,false") != std::string::npos);
  CHECK(r.text.find("suspension_N8,hodgeKernel,1,17,false") != std::string::npos);
}

TEST_CASE("run: json cohomology report") {
  auto c = cohomology_config("polynomial", 6, {"dr", "dpl", "ddl"});
  const auto r = run(c);
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.text);
  CHECK(j["model"] == "polynomial_n1_D6");
  CHECK(j["reports"][1]["dims"] == Json::array({1, 0, 1}));
  CHECK(j["reports"][2]["dims"] == Json::array({0, 1, 0}));
  CHECK(j["reports"][1]["windowed"] == true);
  CHECK(j["inequality"] == Json::array({true, true, true}));
  c.representatives = true;
  const Json reps = Json::parse(run(c).text);
  CHECK(reps["reports"][2]["representatives"][1].size() == 1);
}

TEST_CASE("run: algebra and omega commands") {
  RunConfig a;
  a.command = Command::Algebra;
  a.n = 2;
  a.check = "rank-kernel";
  a.samples = 50;
  a.seed = 7;
  const auto r = run(a);
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.text);
  CHECK(j["samples"].size() == 50);
  CHECK(j["all_pass"] == true);
  for (const auto& s : j["samples"]) {
    CHECK(s["regular"] == true);
    CHECK(s["kernel_abelian"] == true);
    CHECK(s["kernel_equals_centralizer"] == true);
    CHECK(s["rank"] == 8);
    CHECK(s["kernel_dim"] == 2);
  }
  for (const std::string check : {"potential", "quotient", "closed-space", "basis", "spectral"}) {
    a.check = check;
    a.samples = 3;
    const auto q = run(a);
    CHECK_MESSAGE(q.exit_code == 0, check);
    CHECK(Json::parse(q.text)["all_pass"] == true);
  }

  RunConfig o;
  o.command = Command::Omega;
  o.n = 1;
  o.element = R"([["1","0"],["0","-1"]])";
  const Json w = Json::parse(run(o).text);
  CHECK(w["rank"] == 2);
  CHECK(w["kernel_dim"] == 1);
  CHECK(w["closed"] == true);
  CHECK(w["potential_roundtrip"] == true);
}

TEST_CASE("run: error records and exit codes") {
  auto empty = cohomology_config("suspension", 2, {});
  const auto u = run(empty);
  CHECK(u.exit_code == 2);
  CHECK(Json::parse(u.error)["op"] == "usage");

  auto bad_theory = cohomology_config("suspension", 2, {"xyz"});
  CHECK(run(bad_theory).exit_code == 2);

  RunConfig o;
  o.command = Command::Omega;
  o.element = R"([["1","1"],["0","1"]])";
  const auto e = run(o);
  CHECK(e.exit_code == 1);
  const Json rec = Json::parse(e.error);
  CHECK(rec.contains("op"));
  CHECK(rec.contains("reason"));

  auto hodge_poly = cohomology_config("polynomial", 4, {"hodge"});
  const auto h = run(hodge_poly);
  CHECK(h.exit_code == 1);
  CHECK(Json::parse(h.error)["op"] == "hodge_check");
}

TEST_CASE("run: deterministic output and LAB_OUTPUT_DIR") {
  TempDir dir;
  ::setenv("LAB_OUTPUT_DIR", dir.path.c_str(), 1);
  RunConfig a;
  a.command = Command::Algebra;
  a.n = 2;
  a.samples = 5;
  a.seed = 11;
  a.output = "/nonexistent/elsewhere/report.json";
  const auto r1 = run(a);
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r1.written_path.has_value());
  CHECK(fs::path(*r1.written_path) == dir.path / "report.json");
  const std::string first = slurp(dir.path / "report.json");
  const auto r2 = run(a);
  CHECK(slurp(dir.path / "report.json") == first);
  CHECK(r1.text == r2.text);
  a.output.reset();
  auto c = cohomology_config("suspension", 3, {"dr", "dpl"});
  c.format = OutputFormat::Csv;
  const auto r3 = run(c);
  REQUIRE(r3.written_path.has_value());
  CHECK(fs::path(*r3.written_path).filename() == "cohomology_suspension_N3.csv");
  ::unsetenv("LAB_OUTPUT_DIR");
  CHECK_FALSE(resolve_output_path(a).has_value());
}

TEST_CASE("negative fixture: a corrupted d is reported by the identity check") {
  auto good = model::build_polynomial_model(1, 4);
  auto bad = std::make_shared<model::ComplexModel>(*good);
  bad->name = "corrupted";
  bad->d.block(1)(0, 5) += 1;
  bad->d_lambda = model::assemble_codifferential(bad->top_degree, bad->d, bad->star_s);
  const auto ok = check_operator_identities({good});
  CHECK(ok.passed);
  const auto r = check_operator_identities({good, bad});
  CHECK_FALSE(r.passed);
  CHECK(r.computed.find("corrupted") != std::string::npos);
  CHECK(r.computed.find("dd^L+d^Ld") != std::string::npos);
}

TEST_CASE("suite lists every criterion once") {
  const auto criteria = acceptance_criteria();
  REQUIRE(criteria.size() == 11);
  for (std::size_t i = 0; i < criteria.size(); ++i) CHECK(criteria[i].id == static_cast<int>(i + 1));
  const auto r = run_criterion(criteria[3]);
  CHECK(r.ok());
  CHECK(suite_table({r}).rfind("PASS  criterion  4", 0) == 0);
  const Json j = Json::parse(suite_json({r}));
  CHECK(j["criteria"][0]["passed"] == true);
  CHECK_FALSE(j["criteria"][0].contains("seconds"));
}

TEST_CASE("lab binary exit codes") {
  TempDir dir;
  CHECK(run_lab("cohomology --model suspension --cutoff 2 --theories dr,dpl,ddl --format csv", dir.path) == 0);
  const std::string csv = slurp(dir.path / "cohomology_suspension_N2.csv");
  CHECK(csv.find("suspension_N2,dPlusDLambda,1,5,false") != std::string::npos);
  CHECK(run_lab("cohomology --model suspension --theories ''", dir.path) == 2);
  CHECK(slurp(dir.path / "stderr.txt").find("\"op\":\"usage\"") != std::string::npos);
  CHECK(run_lab("cohomology --model nowhere", dir.path) == 2);
  CHECK(run_lab("--bogus", dir.path) == 2);
  CHECK(run_lab("omega --n 1 --element '[[\"1\",\"1\"],[\"0\",\"1\"]]'", dir.path) == 1);
  const Json err = Json::parse(slurp(dir.path / "stderr.txt"));
  CHECK(err.contains("op"));
  CHECK(err.contains("reason"));
  CHECK(run_lab("cohomology --model polynomial --cutoff 0", dir.path) == 2);
  CHECK(run_lab("omega --n 1 --element '[[\"1\",\"0\"],[\"0\",\"-1\"]]' -o omega.json", dir.path) == 0);
  const Json w = Json::parse(slurp(dir.path / "omega.json"));
  CHECK(w["potential_roundtrip"] == true);
}
