#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symplab/model_complexes.hpp"

namespace symplab::cohomology {

using model::ComplexModel;
using model::FormVector;

enum class Theory { DeRham, DPlusDLambda, DDLambda };

/// "deRham", "dPlusDLambda", "ddLambda".
std::string theory_name(Theory t);

struct CohomologyOptions {
  /// Restrict numerators to the model's window when it has one.
  bool use_window = true;
  bool representatives = false;
};

struct CohomologyReport {
  std::string model;
  Theory theory = Theory::DeRham;
  std::vector<std::size_t> dims;
  /// Per degree: columns are numerator vectors, independent modulo the
  /// denominator.
  std::optional<std::vector<Matrix>> representatives;
  bool windowed = false;
};

CohomologyReport de_rham(const ComplexModel& m, const CohomologyOptions& opt = {});

/// (ker d ∩ ker d^Λ) / im(d d^Λ).
CohomologyReport d_plus_dlambda_cohomology(const ComplexModel& m, const CohomologyOptions& opt = {});

/// ker(d d^Λ) / (im d + im d^Λ).
CohomologyReport dd_lambda_cohomology(const ComplexModel& m, const CohomologyOptions& opt = {});

CohomologyReport compute(Theory t, const ComplexModel& m, const CohomologyOptions& opt = {});

/// Per-degree containment checks that make both quotients well formed:
/// im(dd^Λ) ⊆ ker d ∩ ker d^Λ and im d + im d^Λ ⊆ ker(dd^Λ).
struct QuotientSanity {
  std::vector<bool> dpl_denominator_in_numerator;
  std::vector<bool> ddl_denominator_in_numerator;
  bool all() const;
};

QuotientSanity quotient_sanity(const ComplexModel& m);

/// Output of the reduction procedure on an even-degree (d + d^Λ)-cocycle.
struct Reduction {
  Rational constant;
  /// The odd-degree forms y_{2j-1}, ..., y_1 with d y_{2j-1} = x and
  /// d y_{2i-1} = d^Λ y_{2i+1}.
  std::vector<FormVector> chain;
  /// When the constant vanishes: z with d d^Λ z = x.
  std::optional<FormVector> exactness_witness;
};

/// Runs the reduction with radial-homotopy primitives. With a perturbation
/// seed the first primitive is shifted by a seeded d-exact term.
Reduction reduce(const FormVector& x, std::optional<std::uint64_t> perturbation_seed = std::nullopt);

Rational reduction_constant(const FormVector& x);

/// Whether the constant is unchanged when the first primitive is perturbed.
bool reduction_choice_independent(const FormVector& x, std::uint64_t seed);

struct HodgeReport {
  struct Degree {
    int degree = 0;
    std::size_t dimension = 0;
    std::size_t kernel_dim = 0;
    std::size_t cohomology_dim = 0;
    /// rank of dd^Λ on this degree
    std::size_t exact_rank = 0;
    /// rank of d* Ω^{k+1} + (d^Λ)* Ω^{k-1}
    std::size_t coexact_rank = 0;
    /// ker D, im dd^Λ and the co-part together span the whole space
    bool spans = false;

    bool matches() const { return kernel_dim == cohomology_dim; }
    bool exhaustive() const { return spans && kernel_dim + exact_rank + coexact_rank == dimension; }
  };
  std::string model;
  std::vector<Degree> degrees;

  bool all() const;
};

/// Assembles D = (dd^Λ)(dd^Λ)* + (dd^Λ)*(dd^Λ) + d* d^Λ d^Λ* d + d^Λ* d d* d^Λ
/// + d*d + d^Λ*d^Λ with adjoints taken against the model's inner product and
/// compares its kernel with the (d + d^Λ)-cohomology. Unwindowed.
HodgeReport hodge_check(const ComplexModel& m);

/// The per-degree matrix of D (exposed for tests).
Matrix hodge_operator(const ComplexModel& m, int k);

/// dim H_dR ≤ dim H_{d+d^Λ} + dim H_{dd^Λ} per degree. The three reports must
/// come from the same model with the same windowing.
std::vector<bool> inequality_check(const CohomologyReport& dr, const CohomologyReport& dpl,
                                   const CohomologyReport& ddl);

}  // namespace symplab::cohomology
