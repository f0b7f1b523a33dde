#ifndef TORIC_POLYTOPE_HPP
#define TORIC_POLYTOPE_HPP

// Rational polytopes in M_R = Q^n: vertex / facet conversion, normal fans,
// polytopes of torus-invariant divisors, lattice volumes and point counts.

#include "toric/chow.hpp"

#include <vector>

namespace toric {

/// <x, normal> >= -offset.
struct Facet {
  IntVector normal;
  Rational offset;
};

/// <x, normal> == value.
struct Equation {
  IntVector normal;
  Rational value;
};

class Polytope {
 public:
  /// Convex hull; duplicate points are removed.
  static Polytope from_vertices(int ambient_rank, const std::vector<QVector>& points);
  /// Intersection of half-spaces; throws InvalidInput if unbounded. May be
  /// empty.
  static Polytope from_inequalities(int ambient_rank, const std::vector<Facet>& halfspaces);

  int ambient_rank() const { return ambient_rank_; }
  /// Lexicographically sorted.
  const std::vector<QVector>& vertices() const { return vertices_; }
  /// Irredundant facets (only for nonempty polytopes).
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Equation>& equations() const { return equations_; }

  bool empty() const { return vertices_.empty(); }
  /// -1 for the empty polytope.
  int dimension() const;
  bool contains(const QVector& x) const;
  bool is_lattice_polytope() const;

 private:
  int ambient_rank_ = 0;
  std::vector<QVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Equation> equations_;
};

/// Normal fan of a full-dimensional polytope. Ray i is the inner normal of
/// facet i; face_vertices[cone] lists the vertices of the face polar to the
/// cone (dim face = codim cone).
struct NormalFan {
  Fan fan;
  std::vector<std::vector<int>> face_vertices;
};

NormalFan normal_fan(const Polytope& p);

/// P_a = { x : <x, v_i> >= -a_i } for the rays v_i of a complete fan.
struct DivisorPolytope {
  Polytope polytope;
  /// P_a lies in K(fan): the fan refines the normal fan of P_a (every
  /// maximal cone contributes a vertex m_rho of P_a).
  bool in_k = false;
  /// m_rho per maximal cone (order of Fan::maximal_cones()) when in_k.
  std::vector<QVector> cone_vertices;
  IntVector a;
};

DivisorPolytope polytope_from_divisor(const Fan& fan, const IntVector& a);

/// Volume of conv(points) normalized so that a primitive simplex of the
/// lattice with the given row basis has volume 1. The points must span an
/// affine space parallel to the row span; lower-dimensional hulls give 0.
Rational normalized_volume(const std::vector<QVector>& points, const IntMatrix& lattice_rows);

/// Normalized volume of the face of P_a polar to sigma, in the lattice
/// M(sigma).
Rational normalized_volume(const Fan& fan, const DivisorPolytope& p, int sigma);

/// The volume weight of P_a in codimension k: sigma maps to the volume of
/// the polar face with the unit cube of M(sigma) having volume 1, i.e. the
/// normalized volume divided by k!.
RationalWeight volume_weight(const Fan& fan, const DivisorPolytope& p, int k);

/// Exact count by enumerating the bounding box.
Integer count_lattice_points(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

}  // namespace toric

#endif  // TORIC_POLYTOPE_HPP
