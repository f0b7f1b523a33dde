#ifndef TORIC_CHOW_HPP
#define TORIC_CHOW_HPP

// Chow groups from the toric presentation and Chow cohomology as Minkowski
// weights on a complete fan.

#include "toric/fan.hpp"

#include <vector>

namespace toric {

/// Function on the cones of codimension `codim`, stored densely in the order
/// of Fan::cones_of_codim(codim).
template <typename Scalar>
struct Weight {
  int codim = 0;
  Vector<Scalar> values;

  friend bool operator==(const Weight& a, const Weight& b) { return a.codim == b.codim && a.values == b.values; }
  Weight& operator+=(const Weight& o) { values += o.values; return *this; }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator*(const Scalar& s, Weight w) { w.values *= s; return w; }
};

using MinkowskiWeight = Weight<Integer>;
using RationalWeight = Weight<Rational>;

/// Formal combination of the classes [V(sigma)] over cones of codimension
/// `codim` (a cycle of dimension `codim`), stored like Weight.
template <typename Scalar>
struct Cycle {
  int codim = 0;
  Vector<Scalar> coefficients;

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.codim == b.codim && a.coefficients == b.coefficients;
  }
};

using CycleClass = Cycle<Integer>;

inline RationalWeight to_rational(const MinkowskiWeight& w) { return {w.codim, w.values.cast<Rational>()}; }
/// Throws if some value is not an integer.
MinkowskiWeight to_integer(const RationalWeight& w);

MinkowskiWeight constant_weight(const Fan& fan, int codim, const Integer& value);
MinkowskiWeight zero_weight(const Fan& fan, int codim);
/// The class [V(sigma)].
CycleClass cone_cycle(const Fan& fan, int sigma);

/// Value of a weight at a cone of its codimension.
template <typename Scalar>
const Scalar& value_at(const Fan& fan, const Weight<Scalar>& w, int cone) {
  return w.values(fan.position_in_codim(cone));
}

/// Relations of the presentation: one row per pair (tau, u) with tau of
/// codimension k+1 and u in a basis of M(tau); one column per cone of
/// codimension k; entries <u, n_{sigma,tau}>.
struct RelationSystem {
  IntMatrix matrix;
  std::vector<int> tau;
  std::vector<IntVector> u;
};

RelationSystem relation_system(const Fan& fan, int k);
IntMatrix relation_matrix(const Fan& fan, int k);

/// A_k: generated by [V(sigma)] for sigma of codimension k modulo the rows of
/// the relation matrix.
GroupStructure chow_group(const Fan& fan, int k);

/// Basis of the group of Minkowski weights of codimension k. Requires a
/// complete fan.
std::vector<MinkowskiWeight> weight_basis(const Fan& fan, int k);

struct WeightCheck {
  bool balanced = true;
  struct Violation {
    int tau = 0;
    IntVector u;
  };
  std::vector<Violation> violations;
};

template <typename Scalar>
WeightCheck is_weight(const Fan& fan, const Weight<Scalar>& w);

/// Balancing of a codimension-one weight tested through the cycle sums
/// around every codimension-two cone (facet functionals instead of lattice
/// points).
template <typename Scalar>
bool balanced_around_codim2(const Fan& fan, const Weight<Scalar>& w);

template <typename Scalar>
Scalar degree_pairing(const Weight<Scalar>& w, const Cycle<Scalar>& z);

/// T-Cartier data: one u(rho) in M per maximal cone, in the order of
/// Fan::maximal_cones().
struct CartierData {
  std::vector<IntVector> u;
};

/// c(sigma) with u(rho) - u(rho') = c(sigma) * m_{rho,sigma}; rho is the
/// first of the two maximal cones around sigma.
MinkowskiWeight divisor_to_weight(const Fan& fan, const CartierData& data);

/// Inverse up to principal data; u vanishes on the first maximal cone.
CartierData weight_to_cartier(const Fan& fan, const MinkowskiWeight& w);

/// Normal fan of the hypersimplex Δ(k,n) in Z^n / Z(1,...,1), identified
/// with Z^(n-1) by dropping the last coordinate. Rays are ±e_i and
/// ±(1,...,1).
Fan hypersimplex_fan(int k, int n);

/// Checks the face relations of the hypersimplex on a weight of
/// hypersimplex_fan(k, n) and compares with the balancing test. Returns the
/// common verdict; throws std::logic_error if the two disagree.
bool verify_hypersimplex_relations(int k, int n, const Fan& fan, const MinkowskiWeight& w);

}  // namespace toric

#endif  // TORIC_CHOW_HPP
