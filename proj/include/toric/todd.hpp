#ifndef TORIC_TODD_HPP
#define TORIC_TODD_HPP

// Intersection numbers, the Todd class and Todd weight, and the lattice
// point polynomial of a smooth complete fan; obstruction to a Todd weight
// on arbitrary complete fans.

#include "toric/polynomial.hpp"
#include "toric/polytope.hpp"
#include "toric/product.hpp"

namespace toric {

/// Weight of the divisor D_i: Cartier data <u(rho), v_j> = delta_ij on every
/// maximal cone, mapped to codimension one.
MinkowskiWeight divisor_weight(const Fan& fan, int i);

/// Intersection theory of a smooth complete fan in the variables x_i = [D_i].
class IntersectionRing {
 public:
  explicit IntersectionRing(const Fan& fan, std::uint64_t seed = 0);

  const Fan& fan() const { return fan_; }
  int variables() const { return static_cast<int>(fan_.rays().size()); }

  /// Integral of x^e for |e| = n, from iterated cup products of divisor
  /// weights (cached).
  Integer integral(const Exponent& e);
  /// The same number from the linear relations among the x_i and the
  /// square-free rule on smooth cones.
  Integer integral_by_relations(const Exponent& e) const;

  /// Integral of the degree-n part of p.
  Rational integrate(const Polynomial& p);

  /// sigma ↦ ∫ p * prod_{v_j in sigma} x_j for p homogeneous of degree i.
  RationalWeight polynomial_weight(const Polynomial& p, int i);

  /// Product of x / (1 - e^{-x}) over the rays, truncated at degree n;
  /// monomials whose support spans no cone are dropped.
  Polynomial todd_class() const;

  /// Component i has codimension i.
  std::vector<RationalWeight> todd_weight();

  /// Φ(a) = Σ_i 1/i! ∫ (Σ a_j x_j)^i Td^{n-i}.
  Polynomial ehrhart_polynomial();

  /// Support of e spans a cone of the fan.
  bool spans_cone(const Exponent& e) const;

 private:
  MinkowskiWeight product_weight(const Exponent& e);

  Fan fan_;
  DisplacementRule rule_;
  std::vector<MinkowskiWeight> divisors_;
  std::map<Exponent, MinkowskiWeight> products_;
  std::optional<Polynomial> phi_;
};

struct CoefficientReport {
  struct Entry {
    int cone = 0;
    Rational todd;
    Rational coefficient;
  };
  std::vector<Entry> entries;
  bool all_equal = true;
};

/// Compares Td(sigma) with the coefficient of prod_{v_j in sigma} a_j in Φ.
CoefficientReport coefficient_extraction_check(IntersectionRing& ring);

struct ToddCount {
  Integer count;
  Rational phi;
};

/// Φ(a) for P_a in K(fan), cross-checked against enumeration. Throws
/// PreconditionError when P_a is not in K(fan).
ToddCount count_via_todd(IntersectionRing& ring, const IntVector& a);

struct ToddObstruction {
  bool obstructed = false;
  /// Maximal cone where <u, v_i> = 1 has no solution.
  std::optional<int> cone;
  /// Rays whose rows (v_i, 1) form a nonsingular square matrix.
  std::vector<int> witness_rays;
  /// |det| of that matrix.
  Integer determinant;
};

ToddObstruction todd_obstruction(const Fan& fan);

}  // namespace toric

#endif  // TORIC_TODD_HPP
