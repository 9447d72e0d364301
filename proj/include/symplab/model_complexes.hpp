#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symplab/exterior.hpp"
#include "symplab/linalg.hpp"

namespace symplab::model {

/// One matrix per source degree. The target degree is either k + shift or,
/// for complementing operators such as the star, top - k. A block whose
/// target degree is out of range has zero rows.
class GradedOperator {
 public:
  enum class Kind { Shift, Complement };

  GradedOperator() = default;
  GradedOperator(Kind kind, int shift_or_top, std::vector<Matrix> blocks);
  static GradedOperator shift(int s, std::vector<Matrix> blocks) { return {Kind::Shift, s, std::move(blocks)}; }
  static GradedOperator complement(int top, std::vector<Matrix> blocks) {
    return {Kind::Complement, top, std::move(blocks)};
  }

  Kind kind() const noexcept { return kind_; }
  /// Degree shift for Kind::Shift; for Kind::Complement, the top degree.
  int parameter() const noexcept { return param_; }
  int target_degree(int k) const noexcept { return kind_ == Kind::Shift ? k + param_ : param_ - k; }
  int degrees() const noexcept { return static_cast<int>(blocks_.size()); }
  const Matrix& block(int k) const { return blocks_.at(static_cast<std::size_t>(k)); }
  Matrix& block(int k) { return blocks_.at(static_cast<std::size_t>(k)); }

 private:
  Kind kind_ = Kind::Shift;
  int param_ = 0;
  std::vector<Matrix> blocks_;
};

/// Coefficient ring of the polynomial model: monomials in x1, y1, ..., xn, yn
/// of total degree at most the cutoff, in graded order.
struct PolynomialLayout {
  int n = 0;
  int cutoff = 0;
  std::vector<std::vector<int>> monomials;
  std::map<std::vector<int>, std::size_t> monomial_index;
  ExteriorAlgebra exterior{0};

  int monomial_degree(std::size_t i) const;
  /// Basis index of (monomial, exterior monomial) in degree k.
  std::size_t index(std::size_t monomial, std::size_t ext, int k) const { return monomial * exterior.dim(k) + ext; }
};

enum class ModelKind { Torus, Polynomial, Suspension, Custom };

/// A finite graded cochain model with d (degree +1), the symplectic star
/// (k -> 2n - k) and the codifferential (degree -1).
struct ComplexModel {
  std::string name;
  ModelKind kind = ModelKind::Custom;
  int top_degree = 0;
  std::vector<std::vector<std::string>> graded_basis;
  GradedOperator d;
  GradedOperator star_s;
  GradedOperator d_lambda;
  /// Per-degree positive definite Gram matrices.
  std::optional<std::vector<Matrix>> inner;
  /// Per-degree basis indices whose coefficients are not affected by the
  /// truncation boundary.
  std::optional<std::vector<std::vector<std::size_t>>> window;
  std::shared_ptr<const PolynomialLayout> polynomial;

  std::size_t dim(int k) const {
    return (k < 0 || k > top_degree) ? 0 : graded_basis[static_cast<std::size_t>(k)].size();
  }
};

using ModelPtr = std::shared_ptr<const ComplexModel>;

/// Sign of the codifferential relative to ⋆d⋆ on degree-k forms.
int codifferential_sign(int k);

/// d^Λ_k = (-1)^(k+1) ⋆ d ⋆, assembled from the d and star blocks.
GradedOperator assemble_codifferential(int top, const GradedOperator& d, const GradedOperator& star);

/// Constant-coefficient forms on the 2n-torus: exterior algebra, d = 0,
/// identity inner product.
ModelPtr build_torus_model(int n);

/// Polynomial forms on R^2n with coefficients of total degree <= cutoff.
/// Window: coefficients of degree <= cutoff - 2.
ModelPtr build_polynomial_model(int n, int cutoff);

/// Real Fourier mode on T²: cos or sin of 2π m·x, or the constant.
struct FourierMode {
  int m1 = 0;
  int m2 = 0;
  bool sine = false;
};

/// The full truncated complex on T² with |m1|, |m2| <= N, the pullback of
/// x -> Lx, and the invariant basis it cuts out.
struct SuspensionComplex {
  int cutoff = 0;
  Matrix monodromy;
  std::vector<FourierMode> functions;
  std::vector<std::vector<std::string>> labels;
  std::vector<Matrix> d;
  std::vector<Matrix> star;
  std::vector<Matrix> gram;
  /// Pullback per degree; columns whose mode leaves the box are zero.
  std::vector<Matrix> pullback;
  std::vector<std::vector<bool>> image_in_box;
  std::vector<std::vector<bool>> orbit_stable;
  /// Columns span ker(P - I) on the orbit-stable subspace.
  std::vector<Matrix> invariant_basis;

  std::size_t dim(int k) const { return functions.size() * (k == 1 ? 2 : 1); }
};

/// The d stored here is d / 2π: functions are cos/sin(2π m·x) and the factor
/// 2π is carried as a unit outside the matrices.
SuspensionComplex build_suspension_complex(int cutoff, const Matrix& monodromy = Matrix{{1, 1}, {0, 1}});

/// Invariant subcomplex of the suspension foliation's transverse torus.
ModelPtr build_suspension_model(int cutoff, const Matrix& monodromy = Matrix{{1, 1}, {0, 1}});

/// A homogeneous element of a model. Degrees -1 and top + 1 are allowed and
/// carry an empty coordinate vector.
struct FormVector {
  ModelPtr model;
  int degree = 0;
  Vector coords;

  FormVector(ModelPtr m, int k, Vector c);
  static FormVector zero(ModelPtr m, int k);

  bool is_zero() const { return is_zero_vector(coords); }
  friend FormVector operator+(const FormVector& a, const FormVector& b);
  friend FormVector operator-(const FormVector& a, const FormVector& b);
  friend FormVector operator*(const Rational& s, const FormVector& a);
  friend bool operator==(const FormVector& a, const FormVector& b) {
    return a.degree == b.degree && a.coords == b.coords;
  }
};

/// Applies one graded operator. A target degree of -1 or top + 1 yields the
/// zero form of that (zero-dimensional) degree.
FormVector apply(const GradedOperator& op, const FormVector& v);
FormVector star_s_apply(const FormVector& v);
FormVector d_apply(const FormVector& v);
FormVector d_lambda_apply(const FormVector& v);

enum class Primitive { D, DLambda };

/// w with d w = v (radial homotopy) or d^Λ w = v (homotopy conjugated by the
/// star). Polynomial models only; v must be closed for the chosen operator.
FormVector poincare_antiderivative(const FormVector& v, Primitive op);

/// ω₀^k as a constant-coefficient form of degree 2k.
FormVector omega_power(const ModelPtr& model, int k);

struct AlphaForm {
  FormVector form;
  /// Factor applied to the displayed sum Σ_I Σ_j (x dy - y dx)-substitutions.
  Rational normalization;
};

/// Primitive α_{2k-1} of ω₀^k in the polynomial model, normalized so that
/// d α = ω₀^k exactly.
AlphaForm alpha_form(const ModelPtr& model, int k);

/// Constants in ⋆α_{2k-1} = s α_{2n-2k+1} and d^Λ α_{2k-1} = c ω₀^(k-1),
/// computed rather than assumed. With the involutive star,
/// s = -(k-1)!/(n-k)! and c = -(n-k+1). Empty when the image is not
/// proportional.
struct AlphaRelations {
  std::optional<Rational> star_constant;
  std::optional<Rational> codifferential_constant;
};

AlphaRelations alpha_relations(const ModelPtr& model, int k);

/// Per-degree check of the operator identities.
struct IdentityReport {
  struct Degree {
    int degree = 0;
    bool d_squared = false;
    bool star_involution = false;
    bool codifferential_definition = false;
    bool d_lambda_squared = false;
    bool anticommutation = false;
  };
  std::vector<Degree> degrees;
  bool shapes_ok = false;

  bool all() const;
};

IdentityReport verify_identities(const ComplexModel& model);

/// Column selection matrix for the window of degree k (identity if no window).
Matrix window_embedding(const ComplexModel& model, int k);

}  // namespace symplab::model
