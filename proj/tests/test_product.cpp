#include "doctest.h"
#include "toric/generators.hpp"
#include "toric/product.hpp"

#include <set>
#include <tuple>

using namespace toric;

namespace {

using Term = std::tuple<int, int, long long>;  // ray of sigma, ray of tau, multiplicity

std::set<Term> terms_at_zero(const Fan& f, const IntVector& v) {
  std::set<Term> out;
  for (const auto& p : diagonal_multiplicities(f, f.zero_cone(), Displacement::explicit_vector(v)).pairs)
    if (f.codim(p.sigma) == 1 && f.codim(p.tau) == 1)
      out.emplace(f.cone(p.sigma).rays[0], f.cone(p.tau).rays[0], p.multiplicity.convert_to<long long>());
  return out;
}

std::vector<MinkowskiWeight> all_basis(const Fan& f) {
  std::vector<MinkowskiWeight> out;
  for (int k = 0; k <= f.rank(); ++k)
    for (auto& w : weight_basis(f, k)) out.push_back(w);
  return out;
}

// Degree of the closure of Z*l + v in P^2 against the hyperplane weight:
// every ray met by the translated line contributes |det(l, ray)|.
long long closure_degree_oracle(long long p, long long q, long long vx, long long vy) {
  const long long rays[3][2] = {{1, 0}, {0, 1}, {-1, -1}};
  long long total = 0;
  for (auto& r : rays) {
    // t * l + v = s * r with s > 0.
    long long det = p * (-r[1]) - q * (-r[0]);
    if (det == 0) continue;
    long long s = q * vx - p * vy;  // Cramer numerator for s
    if ((det > 0 && s > 0) || (det < 0 && s < 0)) total += det > 0 ? det : -det;
  }
  return total;
}

}  // namespace

TEST_CASE("hirzebruch displacement formulas for positive m") {
  for (int m = 1; m <= 3; ++m) {
    Fan f = make_fan(hirzebruch_data(m));
    const long long mm = m;
    CHECK(terms_at_zero(f, make_vector({1, 1})) == std::set<Term>{{0, 3, 1}, {1, 2, 1}});
    CHECK(terms_at_zero(f, make_vector({-1, 1 + mm})) == std::set<Term>{{1, 0, 1}, {2, 3, 1}});
    CHECK(terms_at_zero(f, make_vector({-1 - mm, 1})) == std::set<Term>{{1, 0, 1}, {2, 1, 1}, {2, 0, mm}});
    CHECK(terms_at_zero(f, make_vector({-1, -1})) == std::set<Term>{{2, 1, 1}, {3, 0, 1}});
    CHECK(terms_at_zero(f, make_vector({1, -1 - mm})) == std::set<Term>{{3, 2, 1}, {0, 1, 1}});
    CHECK(terms_at_zero(f, make_vector({1 + mm, -1})) == std::set<Term>{{0, 1, 1}, {1, 2, 1}, {0, 2, mm}});
  }
}

TEST_CASE("displacement choices give the same cup product") {
  for (int m = 0; m <= 3; ++m) {
    Fan f = make_fan(hirzebruch_data(m));
    auto basis = weight_basis(f, 1);
    std::vector<IntVector> vs = {make_vector({1, 1}), make_vector({-1, 1 + m}), make_vector({-1 - m, 1}),
                                 make_vector({-1, -1}), make_vector({1, -1 - m}), make_vector({1 + m, -1})};
    for (const auto& c : basis)
      for (const auto& d : basis) {
        MinkowskiWeight ref = cup(f, c, d, Displacement::automatic(0));
        for (const auto& v : vs) CHECK(cup(f, c, d, Displacement::explicit_vector(v)) == ref);
        for (std::uint64_t s = 1; s <= 5; ++s) CHECK(cup(f, c, d, Displacement::automatic(s)) == ref);
      }
  }
}

TEST_CASE("cup product ring axioms") {
  std::vector<Fan> fans = {make_fan(projective_space_data(2)), make_fan(product_of_p1_data(2)),
                           make_fan(hirzebruch_data(2)), make_fan(hypersimplex_data(2, 4))};
  for (const Fan& f : fans) {
    DisplacementRule rule(f, Displacement::automatic(5));
    auto basis = all_basis(f);
    MinkowskiWeight one = constant_weight(f, 0, 1);
    for (const auto& a : basis) {
      CHECK(cup(rule, one, a) == a);
      for (const auto& b : basis) {
        if (a.codim + b.codim > f.rank()) continue;
        MinkowskiWeight ab = cup(rule, a, b);
        CHECK(is_weight(f, ab).balanced);
        CHECK(ab == cup(rule, b, a));
        for (const auto& c : basis) {
          if (ab.codim + c.codim > f.rank()) continue;
          CHECK(cup(rule, ab, c) == cup(rule, a, cup(rule, b, c)));
        }
      }
    }
  }
}

TEST_CASE("intersection numbers on P1 x P1 and P^2") {
  Fan q = make_fan(product_of_p1_data(2));
  // Weights of the two rulings: 1 on the rays of one factor.
  MinkowskiWeight a{1, IntVector::Zero(4)}, b{1, IntVector::Zero(4)};
  for (int r : q.cones_of_codim(1)) {
    const IntVector& v = q.rays()[static_cast<std::size_t>(q.cone(r).rays[0])];
    (v(0) != 0 ? a : b).values(q.position_in_codim(r)) = 1;
  }
  CHECK(cup(q, a, a).values(0) == 0);
  CHECK(cup(q, b, b).values(0) == 0);
  CHECK(cup(q, a, b).values(0) == 1);

  Fan p = make_fan(projective_space_data(2));
  MinkowskiWeight h = constant_weight(p, 1, 1);
  CHECK(cup(p, h, h).values(0) == 1);
  Fan p3 = make_fan(projective_space_data(3));
  MinkowskiWeight h3 = constant_weight(p3, 1, 1);
  CHECK(cup(p3, cup(p3, h3, h3), h3).values(0) == 1);
}

TEST_CASE("cap product with cone cycles evaluates the weight") {
  std::vector<Fan> fans = {make_fan(projective_space_data(2)), make_fan(hirzebruch_data(3)),
                           make_fan(hypersimplex_data(2, 4))};
  for (const Fan& f : fans) {
    DisplacementRule rule(f, Displacement::automatic(2));
    for (const auto& c : all_basis(f))
      for (int gamma : f.cones_of_codim(c.codim)) {
        CycleClass z = cap(rule, c, cone_cycle(f, gamma));
        CHECK(z.codim == 0);
        CHECK(z.coefficients.sum() == value_at(f, c, gamma));
      }
  }
}

TEST_CASE("pullback along the hirzebruch projection") {
  for (int m = 0; m <= 3; ++m) {
    Fan src = make_fan(hirzebruch_data(m));
    Fan tgt = make_fan(projective_space_data(1));
    IntMatrix psi(1, 2);
    psi << 1, 0;
    ToricMorphism f = make_morphism(psi, src, tgt);
    CHECK(f.is_dominant());
    DisplacementRule rule(f, Displacement::automatic(3));
    DisplacementRule diag_src(src, Displacement::automatic(4));
    DisplacementRule diag_tgt(tgt, Displacement::automatic(4));
    auto basis = all_basis(tgt);
    for (const auto& c : basis) {
      CHECK(pullback(rule, c) == pullback_dominant(f, c));
      for (const auto& d : basis) {
        if (c.codim + d.codim > 1) continue;
        CHECK(pullback(rule, cup(diag_tgt, c, d)) == cup(diag_src, pullback(rule, c), pullback(rule, d)));
      }
    }
    // A fibre meets the sections V((0,1)) and V((0,-1)) once and misses the other fibres.
    MinkowskiWeight pt = constant_weight(tgt, 1, 1);
    MinkowskiWeight expected{1, make_vector({0, 1, 0, 1})};
    CHECK(pullback(rule, pt) == expected);
  }
}

TEST_CASE("pullback along the blow-up of the plane") {
  Fan src = make_fan(blown_up_plane_data());
  Fan tgt = make_fan(projective_space_data(2));
  ToricMorphism f = make_morphism(IntMatrix::Identity(2, 2), src, tgt);
  DisplacementRule rule(f, Displacement::automatic(1));
  MinkowskiWeight h = constant_weight(tgt, 1, 1);
  // Value 1 on the three old rays and 0 on the exceptional ray (1,1).
  MinkowskiWeight fh = pullback(rule, h);
  CHECK(fh == MinkowskiWeight{1, make_vector({1, 1, 1, 0})});
  CHECK(fh == pullback_dominant(f, h));
  CHECK(pullback(rule, constant_weight(tgt, 2, 1)) == constant_weight(src, 2, 1));
  DisplacementRule ds(src, Displacement::automatic(1)), dt(tgt, Displacement::automatic(1));
  auto basis = all_basis(tgt);
  for (const auto& c : basis)
    for (const auto& d : basis)
      if (c.codim + d.codim <= 2) CHECK(pullback(rule, cup(dt, c, d)) == cup(ds, pullback(rule, c), pullback(rule, d)));
}

TEST_CASE("non-generic displacement is rejected") {
  Fan f = make_fan(hirzebruch_data(1));
  MinkowskiWeight h = weight_basis(f, 1)[0];
  CHECK_THROWS_AS(cup(f, h, h, Displacement::explicit_vector(make_vector({1, 0}))), GenericityError);
  CHECK_THROWS_AS(cup(f, h, h, Displacement::explicit_vector(make_vector({1, 0, 0}))), InvalidInput);
  Fan open = build_fan(2, {make_vector({1, 0}), make_vector({0, 1})}, {{0, 1}});
  CHECK_THROWS_AS(DisplacementRule(open, Displacement::automatic(0)), PreconditionError);
}

TEST_CASE("torus closures in the projective plane") {
  Fan f = make_fan(projective_space_data(2));
  MinkowskiWeight h = constant_weight(f, 1, 1);
  for (auto [p, q] : {std::pair{1LL, 1LL}, std::pair{2LL, 1LL}, std::pair{3LL, 2LL}, std::pair{1LL, -3LL}}) {
    IntMatrix l(2, 1);
    l << p, q;
    for (std::uint64_t s = 0; s < 5; ++s) {
      TorusClosure t = torus_closure_class(f, l, Displacement::automatic(s));
      long long oracle = closure_degree_oracle(p, q, t.v(0).convert_to<long long>(), t.v(1).convert_to<long long>());
      CHECK(degree_pairing(h, t.cycle) == oracle);
      CHECK(oracle == std::max({std::abs(p), std::abs(q), std::abs(p - q)}));
    }
  }
}

TEST_CASE("torus closures saturate their lattice") {
  Fan f = make_fan(projective_space_data(2));
  IntMatrix l(2, 1);
  l << 2, 2;
  TorusClosure t = torus_closure_class(f, l, Displacement::automatic(0));
  CHECK_FALSE(t.warnings.empty());
  CHECK(degree_pairing(constant_weight(f, 1, 1), t.cycle) == 1);
}
