#pragma once

#include <string>
#include <vector>

#include "symplab/matrix.hpp"

namespace symplab {

/// Univariate polynomial over the rationals, coefficients in ascending order.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }
  /// Sign of p(x) as x → +∞ (or −∞ when `plus_infinity` is false).
  int sign_at_infinity(bool plus_infinity) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'): same roots, each with multiplicity one.
Polynomial squarefree_part(const Polynomial& p);

bool is_squarefree(const Polynomial& p);

/// Characteristic polynomial det(tI - m), via Faddeev–LeVerrier.
Polynomial characteristic_polynomial(const Matrix& m);

/// Evaluates p at a square matrix (Horner).
Matrix evaluate(const Polynomial& p, const Matrix& m);

/// Sturm chain p, p', -rem(p, p'), ... used for exact real root counting.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  int sign_changes_at(const Rational& x) const;
  int sign_changes_at_infinity(bool plus_infinity) const;

  /// Number of distinct real roots in (a, b]; requires p(a) != 0.
  int count_roots(const Rational& a, const Rational& b) const;
  int count_positive_roots() const;
  int count_negative_roots() const;
  int count_real_roots() const;

 private:
  std::vector<Polynomial> chain_;
};

}  // namespace symplab
