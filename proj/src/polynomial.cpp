#include "symplab/polynomial.hpp"

#include <sstream>

#include "symplab/errors.hpp"

namespace symplab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw PreconditionError("Polynomial::leading", "zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Polynomial::sign_at_infinity(bool plus_infinity) const {
  if (is_zero()) return 0;
  const int s = sgn(leading());
  return (plus_infinity || degree() % 2 == 0) ? s : -s;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> v = coeffs_;
  const Rational lc = leading();
  for (auto& c : v) c /= lc;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] -= b.coeffs_[k];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    const Rational a = abs(c);
    if (k == 0 || a != 1) os << symplab::to_string(a);
    if (k > 0) os << (k == 0 || a != 1 ? "*" : "") << var << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("divmod", "division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / lb;
    quo[static_cast<std::size_t>(k - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).quotient;
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("characteristic_polynomial", "matrix is not square");
  const std::size_t n = m.rows();
  // c[k] is the coefficient of t^k; c[n] = 1.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk = Matrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) throw ShapeError("evaluate", "matrix is not square");
  Matrix acc = Matrix::zero(m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += p.coeff(k);
  }
  return acc;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("SturmSequence", "zero polynomial");
  chain_.push_back(p);
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    next = Polynomial{} - divmod(a, b).remainder;
  }
}

namespace {
int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

int SturmSequence::sign_changes_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(q.sign_at(x));
  return count_changes(s);
}

int SturmSequence::sign_changes_at_infinity(bool plus_infinity) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(q.sign_at_infinity(plus_infinity));
  return count_changes(s);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  if (chain_.front().sign_at(a) == 0) throw PreconditionError("SturmSequence::count_roots", "left endpoint is a root");
  return sign_changes_at(a) - sign_changes_at(b);
}

int SturmSequence::count_real_roots() const {
  return sign_changes_at_infinity(false) - sign_changes_at_infinity(true);
}

int SturmSequence::count_negative_roots() const {
  // roots in (-inf, 0], minus a root at zero
  const int nonpositive = sign_changes_at_infinity(false) - sign_changes_at(0);
  return nonpositive - (chain_.front().sign_at(0) == 0 ? 1 : 0);
}

int SturmSequence::count_positive_roots() const {
  const int nonpositive = sign_changes_at_infinity(false) - sign_changes_at(0);
  return count_real_roots() - nonpositive;
}

}  // namespace symplab
