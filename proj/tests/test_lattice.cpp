#include "doctest.h"
#include "toric/lattice.hpp"
#include "toric/polyhedral.hpp"

#include <random>

using namespace toric;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  Eigen::Index c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

bool unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

void check_smith(const IntMatrix& m) {
  SmithDecomposition s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(unimodular(s.U));
  CHECK(unimodular(s.V));
  auto f = s.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
}

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  SmithDecomposition id = smith_normal_form(IntMatrix::Identity(3, 3));
  CHECK(id.D == IntMatrix::Identity(3, 3));

  IntMatrix d23 = mat({{2, 0}, {0, 3}});
  SmithDecomposition s = smith_normal_form(d23);
  CHECK(s.D == mat({{1, 0}, {0, 6}}));
  check_smith(d23);

  IntMatrix zero = IntMatrix::Zero(2, 4);
  CHECK(smith_normal_form(zero).D == zero);
  CHECK(smith_normal_form(zero).rank() == 0);
}

TEST_CASE("smith normal form reconstruction on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    check_smith(random_matrix(rng, r, c, 9));
  }
  check_smith(IntMatrix(0, 3));
}

TEST_CASE("hermite normal form conventions") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m = random_matrix(rng, 3, 4, 6);
    HermiteDecomposition h = hermite_normal_form(m);
    CHECK(m * h.U == h.H);
    CHECK(unimodular(h.U));
    Eigen::Index row = 0;
    for (Eigen::Index j = 0; j < h.rank; ++j) {
      while (h.H(row, j) == 0) ++row;
      CHECK(h.H(row, j) > 0);
      for (Eigen::Index i = 0; i < row; ++i) CHECK(h.H(i, j) == 0);
      for (Eigen::Index k = 0; k < j; ++k) {
        CHECK(h.H(row, k) >= 0);
        CHECK(h.H(row, k) < h.H(row, j));
      }
    }
  }
}

TEST_CASE("integer kernels") {
  IntMatrix k = kernel_basis(mat({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK((k.col(0) == make_vector({1, -1}) || k.col(0) == make_vector({-1, 1})));
  CHECK(kernel_basis(IntMatrix::Identity(3, 3)).cols() == 0);
  IntMatrix k2 = kernel_basis(mat({{2, -1}, {0, 0}}));
  REQUIRE(k2.cols() == 1);
  CHECK(abs(k2(0, 0)) == 1);
  CHECK(abs(k2(1, 0)) == 2);
}

TEST_CASE("kernel bases generate every small solution") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 25; ++t) {
    int r = 1 + static_cast<int>(rng() % 3);
    IntMatrix m = random_matrix(rng, r, 4, 3);
    IntMatrix k = kernel_basis(m);
    CHECK((m * k).isZero());
    for (int a = -5; a <= 5; ++a)
      for (int b = -5; b <= 5; ++b)
        for (int c = -5; c <= 5; ++c)
          for (int d = -5; d <= 5; ++d) {
            IntVector x = make_vector({a, b, c, d});
            if (!(m * x).isZero()) continue;
            CHECK(solve_integer(k, x).has_value());
          }
  }
}

TEST_CASE("cokernel structure") {
  GroupStructure g = cokernel_structure(mat({{2, 0}, {0, 3}}));
  CHECK(g.rank == 0);
  REQUIRE(g.torsion.size() == 1);
  CHECK(g.torsion[0] == 6);
  GroupStructure free3 = cokernel_structure(IntMatrix(3, 0));
  CHECK(free3.rank == 3);
  CHECK(free3.torsion.empty());
  GroupStructure z2 = cokernel_structure(mat({{2}}));
  CHECK(z2.rank == 0);
  CHECK(z2.torsion == std::vector<Integer>{2});
}

TEST_CASE("lattice index and saturation") {
  CHECK(*lattice_index(IntMatrix::Identity(3, 3)) == 1);
  CHECK(*lattice_index(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})) == 2);
  CHECK(!lattice_index(mat({{1, 2}, {0, 0}})).has_value());

  IntMatrix s = saturate(mat({{2}, {0}}));
  CHECK(s == mat({{1}, {0}}));
  IntMatrix full = saturate(mat({{1, 1}, {1, -1}}));
  CHECK(*lattice_index(full) == 1);
  CHECK(*lattice_index(saturate(IntMatrix::Identity(3, 3))) == 1);
  CHECK(!is_saturated(mat({{1, 1}, {1, -1}})));
}

TEST_CASE("lattice index is multiplicative along chains") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    IntMatrix l1 = random_matrix(rng, 3, 3, 4);
    if (determinant(l1) == 0) continue;
    IntMatrix a = random_matrix(rng, 3, 3, 3);
    if (determinant(a) == 0) continue;
    IntMatrix l2 = l1 * a;  // L2 ⊆ L1 with [L1 : L2] = |det a|
    CHECK(*lattice_index(l2) == *lattice_index(l1) * abs(determinant(a)));
  }
}

TEST_CASE("quotient maps") {
  IntMatrix b = mat({{1}, {1}, {0}});
  QuotientMap q = quotient_by(b);
  CHECK(q.projection.rows() == 2);
  CHECK((q.projection * b).isZero());
  CHECK(q.projection * q.section == IntMatrix::Identity(2, 2));
  IntMatrix both(3, 3);
  both << b, q.section;
  CHECK(unimodular(both));
}

TEST_CASE("cone description") {
  ConeDescription d = describe_cone(mat({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  CHECK(d.dim == 2);
  CHECK(d.facet_normals.rows() == 2);
  CHECK(d.equations.rows() == 1);
  CHECK(d.pointed);
  CHECK(d.extreme == std::vector<bool>{true, true, false});

  ConeDescription line = describe_cone(mat({{1, -1}}));
  CHECK(!line.pointed);
}

TEST_CASE("fourier motzkin feasibility") {
  ConstraintSystem s(2);
  s.add(LinearConstraint::geq(QVector(to_rational(make_vector({1, 0}))), 0));
  s.add(LinearConstraint::geq(QVector(to_rational(make_vector({0, 1}))), 0));
  s.add(LinearConstraint::geq(QVector(to_rational(make_vector({-1, -1}))), -1));
  CHECK(s.feasible());
  CHECK(s.dimension() == 2);
  ConstraintSystem point = s;
  point.add(LinearConstraint::geq(QVector(to_rational(make_vector({1, 1}))), 1));
  point.add(LinearConstraint::eq(QVector(to_rational(make_vector({1, -1}))), 0));
  CHECK(point.dimension() == 0);
  REQUIRE(point.unique_point());
  CHECK(*point.unique_point() == QVector(to_rational(make_vector({1, 1}))) / Rational(2));
  ConstraintSystem strict = s;
  strict.add(LinearConstraint::gt(QVector(to_rational(make_vector({1, 1}))), 1));
  CHECK(!strict.feasible());
}
