#include "doctest.h"
#include "toric/generators.hpp"
#include "toric/todd.hpp"

#include <functional>
#include <random>

using namespace toric;

namespace {

void each_monomial(int vars, int degree, const std::function<void(const Exponent&)>& fn) {
  Exponent e(static_cast<std::size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == vars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      fn(e);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, degree);
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long det_ll(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det_ll(minor);
  }
  return total;
}

}  // namespace

TEST_CASE("divisor weights") {
  Fan f = make_fan(projective_space_data(2));
  for (int i = 0; i < 3; ++i) CHECK(divisor_weight(f, i) == constant_weight(f, 1, 1));
  CHECK_THROWS_AS(divisor_weight(make_fan(pyramid_fan_data()), 0), PreconditionError);
}

TEST_CASE("intersection numbers from products and from relations agree") {
  std::vector<Fan> fans = {make_fan(projective_space_data(2)), make_fan(projective_space_data(3)),
                           make_fan(product_of_p1_data(3)), make_fan(hirzebruch_data(0)),
                           make_fan(hirzebruch_data(3)), make_fan(blown_up_plane_data())};
  for (const Fan& f : fans) {
    IntersectionRing ring(f, 9);
    each_monomial(ring.variables(), f.rank(), [&](const Exponent& e) {
      CHECK(ring.integral(e) == ring.integral_by_relations(e));
    });
  }
}

TEST_CASE("self-intersections on hirzebruch surfaces") {
  for (int m = 0; m <= 3; ++m) {
    IntersectionRing ring(make_fan(hirzebruch_data(m)));
    CHECK(ring.integral({0, 2, 0, 0}) == -m);
    CHECK(ring.integral({0, 0, 0, 2}) == m);
    CHECK(ring.integral({2, 0, 0, 0}) == 0);
    CHECK(ring.integral({1, 1, 0, 0}) == 1);
    CHECK(ring.integral({1, 0, 1, 0}) == 0);
  }
}

TEST_CASE("todd weight of hirzebruch surfaces") {
  for (int m = 0; m <= 3; ++m) {
    IntersectionRing ring(make_fan(hirzebruch_data(m)));
    auto td = ring.todd_weight();
    CHECK(td[0] == to_rational(constant_weight(ring.fan(), 0, 1)));
    CHECK(td[1].values == (QVector(4) << Rational(1), Rational(2 - m, 2), Rational(1), Rational(2 + m, 2)).finished());
    CHECK(td[2].values(0) == 1);
  }
}

TEST_CASE("lattice point polynomial of projective spaces") {
  for (int n = 1; n <= 3; ++n) {
    IntersectionRing ring(make_fan(projective_space_data(n)));
    Polynomial phi = ring.ehrhart_polynomial();
    for (int d = 0; d <= 4; ++d) {
      QVector a = QVector::Zero(n + 1);
      a(n) = d;
      CHECK(phi.evaluate(a) == binomial(d + n, n));
      a(n) = 0;
      a(0) = d;
      CHECK(phi.evaluate(a) == binomial(d + n, n));
    }
  }
}

TEST_CASE("lattice point polynomial of the cube") {
  // Rays e1, e2, e3, -e1, -e2, -e3 in generator order.
  Fan f = make_fan(product_of_p1_data(3));
  IntersectionRing ring(f);
  Polynomial phi = ring.ehrhart_polynomial();
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    QVector a(6);
    for (int i = 0; i < 6; ++i) a(i) = static_cast<long long>(rng() % 7) - 2;
    Rational expected = 1;
    for (int axis = 0; axis < 3; ++axis) {
      int plus = -1, minus = -1;
      for (std::size_t j = 0; j < f.rays().size(); ++j) {
        if (f.rays()[j](axis) == 1) plus = static_cast<int>(j);
        if (f.rays()[j](axis) == -1) minus = static_cast<int>(j);
      }
      expected *= a(plus) + a(minus) + 1;
    }
    CHECK(phi.evaluate(a) == expected);
  }
}

TEST_CASE("square-free coefficients equal the todd weight") {
  std::vector<Fan> fans = {make_fan(projective_space_data(1)), make_fan(projective_space_data(2)),
                           make_fan(product_of_p1_data(2)), make_fan(hirzebruch_data(1)),
                           make_fan(hirzebruch_data(2)), make_fan(product_of_p1_data(3))};
  for (const Fan& f : fans) {
    IntersectionRing ring(f);
    CoefficientReport r = coefficient_extraction_check(ring);
    CHECK(r.all_equal);
    CHECK(static_cast<int>(r.entries.size()) == f.cone_count());
  }
}

TEST_CASE("counts agree with enumeration") {
  IntersectionRing ring(make_fan(hirzebruch_data(2)));
  int counted = 0;
  for (int a1 = 0; a1 <= 3; ++a1)
    for (int a2 = 0; a2 <= 2; ++a2)
      for (int a3 = 0; a3 <= 3; ++a3)
        for (int a4 = -1; a4 <= 2; ++a4) {
          IntVector a = make_vector({a1, a2, a3, a4});
          if (!polytope_from_divisor(ring.fan(), a).in_k) {
            CHECK_THROWS_AS(count_via_todd(ring, a), PreconditionError);
            continue;
          }
          ToddCount c = count_via_todd(ring, a);
          CHECK(c.phi == Rational(c.count));
          ++counted;
        }
  CHECK(counted > 25);
}

TEST_CASE("pyramid fan has no todd weight") {
  Fan f = make_fan(pyramid_fan_data());
  ToddObstruction o = todd_obstruction(f);
  REQUIRE(o.obstructed);
  REQUIRE(o.witness_rays.size() == 4);
  std::vector<std::vector<long long>> rows;
  for (int r : o.witness_rays) {
    std::vector<long long> row;
    for (int i = 0; i < 3; ++i) row.push_back(f.rays()[static_cast<std::size_t>(r)](i).convert_to<long long>());
    row.push_back(1);
    rows.push_back(row);
  }
  CHECK(std::llabs(det_ll(rows)) == 176);
  CHECK(o.determinant == 176);
  CHECK_THROWS_AS(IntersectionRing{f}, PreconditionError);
}

TEST_CASE("obstruction on other fans") {
  CHECK_FALSE(todd_obstruction(make_fan(projective_space_data(3))).obstructed);
  CHECK_FALSE(todd_obstruction(make_fan(hirzebruch_data(3))).obstructed);
  // Cube faces are planar until a vertex is pushed out.
  CHECK_FALSE(todd_obstruction(make_fan(cube_fan_data(0))).obstructed);
  CHECK(todd_obstruction(make_fan(cube_fan_data(2))).obstructed);
}

TEST_CASE("degree-one part of the todd weight is half the sum of the divisors") {
  for (const Fan& f : {make_fan(projective_space_data(3)), make_fan(hirzebruch_data(2)), make_fan(product_of_p1_data(3))}) {
    IntersectionRing ring(f);
    RationalWeight half{1, QVector::Zero(static_cast<Eigen::Index>(f.cones_of_codim(1).size()))};
    for (int i = 0; i < ring.variables(); ++i) half += Rational(1, 2) * to_rational(divisor_weight(f, i));
    CHECK(ring.todd_weight()[1] == half);
  }
}
