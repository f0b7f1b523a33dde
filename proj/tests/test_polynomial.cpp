#include "doctest.h"
#include "toric/polynomial.hpp"

using namespace toric;

TEST_CASE("polynomial arithmetic") {
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  Polynomial p = x * y;
  p += Polynomial::constant(2, 1);
  CHECK(p.degree() == 2);
  CHECK(p.coefficient({1, 1}) == 1);
  CHECK(p.coefficient({0, 0}) == 1);
  CHECK(p.coefficient({2, 0}) == 0);
  Polynomial sq = p * p;
  CHECK(sq.coefficient({1, 1}) == 2);
  CHECK(sq.coefficient({2, 2}) == 1);
  CHECK(Polynomial::multiply_truncated(p, p, 2).degree() == 2);
  CHECK(sq.homogeneous_part(2).terms().size() == 1);
  CHECK(sq.evaluate((QVector(2) << Rational(2), Rational(3)).finished()) == 49);
}

TEST_CASE("polynomial printing") {
  Polynomial p(2);
  p.add_term({1, 1}, Rational(1));
  p.add_term({0, 2}, Rational(-1, 2));
  p.add_term({0, 0}, Rational(1));
  CHECK(p.to_string("a") == "a1*a2 - 1/2*a2^2 + 1");
  p.add_term({1, 1}, Rational(-1));
  CHECK(p.coefficient({1, 1}) == 0);
  CHECK(p.terms().size() == 2);
  CHECK(Polynomial(3).to_string() == "0");
}
