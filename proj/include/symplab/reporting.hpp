#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symplab/errors.hpp"
#include "symplab/model_complexes.hpp"

namespace symplab::cli {

/// Invalid flag combinations; mapped to exit status 2.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& reason) : Error("usage", reason) {}
};

enum class Command { Algebra, Omega, Cohomology, Suite };
enum class OutputFormat { Json, Csv };

struct RunConfig {
  Command command = Command::Suite;
  int n = 1;
  /// D for the polynomial model, N for the suspension; 0 picks the default.
  int cutoff = 0;
  std::string model = "torus";
  std::vector<std::string> theories{"dr", "dpl", "ddl"};
  std::string check = "rank-kernel";
  int samples = 10;
  std::uint64_t seed = 1;
  std::string element;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output;
  bool windowed = true;
  bool representatives = false;
  /// Where to write the model bundle, if anywhere.
  std::optional<std::string> bundle;
};

struct RunResult {
  int exit_code = 0;
  /// Report text (also written to the output file when one is resolved).
  std::string text;
  /// JSON {op, reason} on failure.
  std::string error;
  std::optional<std::string> written_path;
  /// Human-readable table for the console (suite only).
  std::string summary;
};

/// Throws UsageError.
void validate(const RunConfig& config);

/// Output file for the report: LAB_OUTPUT_DIR joined with the file name of
/// --output (or a default name), else --output itself, else none.
std::optional<std::string> resolve_output_path(const RunConfig& config);

/// Dispatches one command. Library errors become exit 1 with an error
/// record, usage errors exit 2. Never throws.
RunResult run(const RunConfig& config);

std::string error_record(const std::string& op, const std::string& reason);

model::ModelPtr build_model(const std::string& kind, int n, int cutoff);

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string expected;
  std::string computed;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;

  bool within_limit() const { return seconds <= limit_seconds; }
  bool ok() const { return passed && within_limit(); }
};

/// The identity checks behind criterion 5, on an arbitrary model list.
CriterionResult check_operator_identities(const std::vector<model::ModelPtr>& models);

struct Criterion {
  int id;
  double limit_seconds;
  std::function<CriterionResult()> body;
};

/// All acceptance criteria in order; each body fills expected, computed and
/// passed. Timing is added by run_criterion.
std::vector<Criterion> acceptance_criteria();
CriterionResult run_criterion(const Criterion& c);
std::vector<CriterionResult> run_suite();

std::string suite_table(const std::vector<CriterionResult>& results);
/// Timing-free JSON summary, byte-stable across runs.
std::string suite_json(const std::vector<CriterionResult>& results);

}  // namespace symplab::cli
