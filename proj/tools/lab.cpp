// lab: command-line front end for the symplab library.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "symplab/reporting.hpp"

using symplab::cli::Command;
using symplab::cli::OutputFormat;
using symplab::cli::RunConfig;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for sp(2n,R) forms and basic symplectic cohomology"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::string theories = "dr,dpl,ddl";
  std::string output;
  std::string bundle;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", output, "Report file (LAB_OUTPUT_DIR overrides the directory)");
  };

  auto* algebra = app.add_subcommand("algebra", "Batch checks on random elements of sp(2n,R)");
  algebra->add_option("--n", cfg.n, "Rank n")->default_val(1);
  algebra->add_option("--check", cfg.check, "rank-kernel, potential, quotient, closed-space, basis or spectral")
      ->default_val("rank-kernel");
  algebra->add_option("--samples", cfg.samples, "Number of random elements")->default_val(10);
  algebra->add_option("--seed", cfg.seed, "Random seed")->default_val(1);
  add_output(algebra);

  auto* omega = app.add_subcommand("omega", "Analyze omega_A for one element");
  omega->add_option("--n", cfg.n, "Rank n")->default_val(1);
  omega->add_option("--element", cfg.element, "Matrix as JSON rows of rationals")->required();
  add_output(omega);

  auto* coh = app.add_subcommand("cohomology", "Cohomology dimensions of a finite model");
  coh->add_option("--model", cfg.model, "torus, polynomial or suspension")->required();
  coh->add_option("--n", cfg.n, "Rank n (torus, polynomial)")->default_val(1);
  coh->add_option("--cutoff", cfg.cutoff, "Coefficient degree D or Fourier cutoff N");
  coh->add_option("--theories", theories, "Comma list of dr, dpl, ddl, hodge")->default_val("dr,dpl,ddl");
  coh->add_flag("--no-window", "Do not restrict numerators to the trusted window");
  coh->add_flag("--representatives", cfg.representatives, "Include representative vectors (json only)");
  coh->add_option("--bundle", bundle, "Also write the model bundle to this file");
  add_output(coh);

  auto* suite = app.add_subcommand("suite", "Run all acceptance checks");
  suite->add_option("--output,-o", output, "JSON summary file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (algebra->parsed()) cfg.command = Command::Algebra;
  else if (omega->parsed()) cfg.command = Command::Omega;
  else if (coh->parsed()) cfg.command = Command::Cohomology;
  else cfg.command = Command::Suite;

  cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  cfg.theories = split_list(theories);
  if (!output.empty()) cfg.output = output;
  if (!bundle.empty()) cfg.bundle = bundle;
  cfg.windowed = coh->count("--no-window") == 0;
  if (coh->parsed() && coh->count("--cutoff") && cfg.cutoff < 1) {
    std::cerr << symplab::cli::error_record("usage", "--cutoff must be at least 1") << "\n";
    return 2;
  }

  const auto result = symplab::cli::run(cfg);
  if (!result.summary.empty()) std::cout << result.summary;
  else if (!result.written_path && result.exit_code == 0) std::cout << result.text;
  if (!result.error.empty()) std::cerr << result.error << "\n";
  return result.exit_code;
}
