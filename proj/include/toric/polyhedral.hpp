#ifndef TORIC_POLYHEDRAL_HPP
#define TORIC_POLYHEDRAL_HPP

// Exact polyhedral primitives shared by cones, fans and polytopes:
// double description of a cone from its generators and Fourier-Motzkin
// elimination for small systems of linear constraints.

#include "toric/scalar.hpp"

#include <optional>
#include <vector>

namespace toric {

/// H-description of the cone spanned by a set of integer generators.
/// Facet normals point inward: <a, x> >= 0 on the cone.
struct ConeDescription {
  Eigen::Index dim = 0;
  IntMatrix facet_normals;  // one primitive normal per row
  IntMatrix equations;      // rows form a basis of span(cone)^perp ∩ Z^n
  /// For each facet, indices of the generators lying on it.
  std::vector<std::vector<int>> facet_generators;
  bool pointed = true;
  /// Generators that span extreme rays (duplicates of an earlier generator
  /// direction are reported as non-extreme).
  std::vector<bool> extreme;
};

/// Brute-force double description for small cones (n <= 6, a few dozen
/// generators). A facet is a hyperplane through dim-1 independent generators
/// with all generators on one side.
ConeDescription describe_cone(const IntMatrix& generators);

/// One linear constraint a.x (>=, >, ==) b over the rationals.
struct LinearConstraint {
  enum class Kind { GreaterEqual, Greater, Equal };
  QVector a;
  Rational b;
  Kind kind = Kind::GreaterEqual;

  static LinearConstraint geq(QVector a, Rational b) { return {std::move(a), std::move(b), Kind::GreaterEqual}; }
  static LinearConstraint gt(QVector a, Rational b) { return {std::move(a), std::move(b), Kind::Greater}; }
  static LinearConstraint eq(QVector a, Rational b) { return {std::move(a), std::move(b), Kind::Equal}; }

  bool satisfied_by(const QVector& x) const;
};

/// Conjunction of linear constraints in a fixed number of variables.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(Eigen::Index variables) : variables_(variables) {}

  Eigen::Index variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  ConstraintSystem& add(LinearConstraint c);
  ConstraintSystem& add_all(const ConstraintSystem& other);

  /// Exact feasibility by Fourier-Motzkin elimination with strictness
  /// tracking and Chernikov pruning.
  bool feasible() const;

  /// Dimension of the affine hull of the solution set; -1 when empty.
  /// Only meaningful for systems without strict constraints.
  int dimension() const;

  /// Equalities (given and implicit) cutting out the affine hull.
  std::vector<LinearConstraint> affine_hull() const;

  /// The unique solution when the solution set is a single point.
  std::optional<QVector> unique_point() const;

 private:
  Eigen::Index variables_;
  std::vector<LinearConstraint> constraints_;
};

/// Constraints x in cone(generators) expressed by the described facets and
/// equations, optionally translated: x - offset in cone.
ConstraintSystem cone_constraints(const ConeDescription& cone, Eigen::Index n,
                                  const QVector* offset = nullptr);

}  // namespace toric

#endif  // TORIC_POLYHEDRAL_HPP
