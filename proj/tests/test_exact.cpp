#include <random>

#include "doctest.h"
#include "symplab/errors.hpp"
#include "symplab/linalg.hpp"
#include "symplab/polynomial.hpp"

using namespace symplab;

TEST_CASE("rationals parse to canonical form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational(" 7 ")) == "7");
  CHECK(parse_rational("+3/9") == Rational(1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rational text round trip on random fractions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
  for (int i = 0; i < 200; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    const Rational back = parse_rational(to_string(r));
    CHECK(back == r);
    CHECK(back.get_den() > 0);
    CHECK(gcd(back.get_num(), back.get_den()) == 1);
  }
}

TEST_CASE("matrix products and stacking") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, 1}, {1, 0}};
  CHECK(a * b == Matrix{{2, 1}, {4, 3}});
  CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
  CHECK(hstack(a, b).cols() == 4);
  CHECK(vstack(a, b).rows() == 4);
  CHECK(kron(Matrix::identity(2), b).rows() == 4);
  CHECK_THROWS_AS(a * Matrix(3, 1), ShapeError);
  CHECK(Matrix{{0, 1}, {-1, 0}}.is_antisymmetric());
}

TEST_CASE("row reduction, rank and nullspace") {
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  const Matrix ns = nullspace(m);
  REQUIRE(ns.cols() == 1);
  CHECK((m * ns).is_zero());
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(nullspace(Matrix::identity(3)).cols() == 0);
  CHECK(nullspace(Matrix(2, 3)).cols() == 3);
}

TEST_CASE("solve, inverse and determinant agree") {
  const Matrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(determinant(a) == 18);
  const Matrix inv = inverse(a);
  CHECK(a * inv == Matrix::identity(3));
  const Matrix b{{1}, {2}, {3}};
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  const Matrix singular{{1, 2}, {2, 4}};
  CHECK(determinant(singular) == 0);
  CHECK_THROWS_AS(inverse(singular), PreconditionError);
  CHECK_FALSE(solve(singular, Matrix{{1}, {0}}).has_value());
}

TEST_CASE("quotient dimension and column space containment") {
  const Matrix num{{1, 0}, {0, 1}, {0, 0}};
  const Matrix den{{1}, {0}, {0}};
  CHECK(quotient_dimension(num, den) == 1);
  CHECK(column_space_contains(num, den));
  CHECK_FALSE(column_space_contains(den, num));
  const Matrix other{{1, 0}, {0, 0}, {0, 1}};
  CHECK(intersect_column_spaces(num, other).cols() == 1);
}

TEST_CASE("polynomial gcd and squarefree test") {
  const Polynomial p({-1, 0, 1});          // t^2 - 1
  const Polynomial q({1, 2, 1});           // (t + 1)^2
  CHECK(gcd(p, q) == Polynomial({1, 1}));  // t + 1
  CHECK(is_squarefree(p));
  CHECK_FALSE(is_squarefree(q));
  CHECK(squarefree_part(q).degree() == 1);
  const auto dm = divmod(Polynomial({-1, 0, 0, 1}), Polynomial({-1, 1}));
  CHECK(dm.remainder.is_zero());
  CHECK(dm.quotient == Polynomial({1, 1, 1}));
}

TEST_CASE("Sturm counts real roots exactly") {
  // (t - 1)(t - 2)(t + 3)(t^2 + 1)
  const Polynomial p = Polynomial({-1, 1}) * Polynomial({-2, 1}) * Polynomial({3, 1}) * Polynomial({1, 0, 1});
  const SturmSequence s(p);
  CHECK(s.count_real_roots() == 3);
  CHECK(s.count_positive_roots() == 2);
  CHECK(s.count_negative_roots() == 1);
  CHECK(s.count_roots(Rational(3, 2), 5) == 1);
  // t (t - 4): root at zero is neither positive nor negative
  const SturmSequence z(Polynomial({0, -4, 1}));
  CHECK(z.count_positive_roots() == 1);
  CHECK(z.count_negative_roots() == 0);
}

TEST_CASE("characteristic polynomial satisfies Cayley-Hamilton") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = dist(rng);
    const Polynomial p = characteristic_polynomial(m);
    CHECK(p.degree() == 4);
    CHECK(p.leading() == 1);
    CHECK(p.coeff(3) == -m.trace());
    CHECK(p.coeff(0) == determinant(m));
    CHECK(evaluate(p, m).is_zero());
  }
}
