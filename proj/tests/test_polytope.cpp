#include "doctest.h"
#include "toric/generators.hpp"
#include "toric/polytope.hpp"

#include <numeric>
#include <random>

using namespace toric;

namespace {

QVector q(std::initializer_list<long long> v) { return to_rational(make_vector(v)); }

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Lattice polygon count from Pick's theorem: twice the area plus boundary
// points, halved, plus one.
long long pick_count(const std::vector<std::pair<long long, long long>>& ccw) {
  long long twice_area = 0, boundary = 0;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    auto [x0, y0] = ccw[i];
    auto [x1, y1] = ccw[(i + 1) % ccw.size()];
    twice_area += x0 * y1 - x1 * y0;
    boundary += gcd_ll(x1 - x0, y1 - y0);
  }
  return (twice_area + boundary) / 2 + 1;
}

// Convex hull (monotone chain), counterclockwise, collinear points dropped.
std::vector<std::pair<long long, long long>> hull(std::vector<std::pair<long long, long long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long long, long long>> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

TEST_CASE("vertex and facet descriptions of a square") {
  Polytope p = Polytope::from_vertices(2, {q({0, 0}), q({1, 0}), q({0, 1}), q({1, 1}), q({1, 0})});
  CHECK(p.vertices().size() == 4);
  CHECK(p.facets().size() == 4);
  CHECK(p.dimension() == 2);
  CHECK(p.is_lattice_polytope());
  CHECK(p.contains(q({1, 1})));
  CHECK_FALSE(p.contains(q({2, 0})));
  Polytope r = Polytope::from_inequalities(2, p.facets());
  CHECK(r.vertices() == p.vertices());
}

TEST_CASE("lower-dimensional and empty polytopes") {
  Polytope seg = Polytope::from_vertices(3, {q({0, 0, 0}), q({2, 2, 0}), q({1, 1, 0})});
  CHECK(seg.dimension() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(count_lattice_points(seg) == 3);
  Polytope empty = Polytope::from_inequalities(1, {{make_vector({1}), Rational(-2)}, {make_vector({-1}), Rational(1)}});
  CHECK(empty.empty());
  CHECK(empty.dimension() == -1);
  CHECK_THROWS_AS(Polytope::from_inequalities(2, {{make_vector({1, 0}), Rational(0)}}), InvalidInput);
}

TEST_CASE("normal fan of the square is P1 x P1") {
  NormalFan nf = normal_fan(Polytope::from_vertices(2, {q({0, 0}), q({1, 0}), q({0, 1}), q({1, 1})}));
  CHECK(nf.fan.is_complete());
  CHECK(nf.fan.is_smooth());
  CHECK(nf.fan.rays().size() == 4);
  for (int r : nf.fan.cones_of_codim(1)) CHECK(nf.face_vertices[static_cast<std::size_t>(r)].size() == 2);
  for (int m : nf.fan.maximal_cones()) CHECK(nf.face_vertices[static_cast<std::size_t>(m)].size() == 1);
}

TEST_CASE("normal fan of a simplex is projective space") {
  NormalFan nf = normal_fan(Polytope::from_vertices(3, {q({0, 0, 0}), q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1})}));
  CHECK(nf.fan.is_smooth());
  CHECK(nf.fan.maximal_cones().size() == 4);
}

TEST_CASE("pick's theorem agrees with enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::pair<long long, long long>> pts;
    for (int i = 0; i < 6; ++i)
      pts.emplace_back(static_cast<long long>(rng() % 9) - 4, static_cast<long long>(rng() % 9) - 4);
    auto h = hull(pts);
    if (h.size() < 3) continue;
    std::vector<QVector> vs;
    for (auto [x, y] : h) vs.push_back(q({x, y}));
    Polytope p = Polytope::from_vertices(2, vs);
    CHECK(count_lattice_points(p) == pick_count(h));
  }
}

TEST_CASE("normalized volumes") {
  IntMatrix id = IntMatrix::Identity(2, 2);
  CHECK(normalized_volume({q({0, 0}), q({1, 0}), q({0, 1})}, id) == 1);
  CHECK(normalized_volume({q({0, 0}), q({1, 0}), q({0, 1}), q({1, 1})}, id) == 2);
  CHECK(normalized_volume({q({0, 0}), q({1, 0}), q({2, 0})}, id) == 0);
  IntMatrix id3 = IntMatrix::Identity(3, 3);
  CHECK(normalized_volume({q({0, 0, 0}), q({2, 0, 0}), q({0, 2, 0}), q({0, 0, 2})}, id3) == 8);
  // Segment from (0,0) to (3,3) on the line spanned by (1,1).
  IntMatrix line(1, 2);
  line << 1, 1;
  CHECK(normalized_volume({q({0, 0}), q({3, 3})}, line) == 3);
}

TEST_CASE("divisor polytopes of the projective plane") {
  Fan f = make_fan(projective_space_data(2));
  for (int d = 0; d <= 5; ++d) {
    DivisorPolytope p = polytope_from_divisor(f, make_vector({0, 0, d}));
    CHECK(p.in_k);
    CHECK(count_lattice_points(p.polytope) == (d + 1) * (d + 2) / 2);
    RationalWeight top = volume_weight(f, p, 2);
    CHECK(top.values(0) == Rational(d * d, 2));
  }
}

TEST_CASE("volume weight of the square [-1,1]^2") {
  Fan f = make_fan(product_of_p1_data(2));
  DivisorPolytope p = polytope_from_divisor(f, make_vector({1, 1, 1, 1}));
  CHECK(p.in_k);
  CHECK(volume_weight(f, p, 2).values(0) == 4);
  for (const auto& x : volume_weight(f, p, 1).values) CHECK(x == 2);
  for (const auto& x : volume_weight(f, p, 0).values) CHECK(x == 1);
}

TEST_CASE("divisor polytopes outside K") {
  Fan f = make_fan(hirzebruch_data(2));
  // a1 + a3 < m a2.
  DivisorPolytope p = polytope_from_divisor(f, make_vector({0, 1, 0, 0}));
  CHECK_FALSE(p.in_k);
  CHECK(polytope_from_divisor(f, make_vector({1, 1, 1, 0})).in_k);
}

TEST_CASE("minkowski sums") {
  Polytope sq = Polytope::from_vertices(2, {q({0, 0}), q({1, 0}), q({0, 1}), q({1, 1})});
  Polytope tri = Polytope::from_vertices(2, {q({0, 0}), q({1, 0}), q({0, 1})});
  Polytope s = minkowski_sum(sq, sq);
  CHECK(s.vertices().size() == 4);
  CHECK(count_lattice_points(s) == 9);
  Polytope t = minkowski_sum(sq, tri);
  CHECK(t.vertices().size() == 5);
  CHECK(count_lattice_points(t) == 8);
}
