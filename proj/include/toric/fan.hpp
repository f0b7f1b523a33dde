#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

// Rational polyhedral cones and fans in Z^n.

#include "toric/lattice.hpp"
#include "toric/polyhedral.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// A strongly convex rational cone of a fan, spanned by a subset of the
/// fan's rays.
struct Cone {
  std::vector<int> rays;  // sorted indices into Fan::rays()
  int dim = 0;
  IntMatrix generators;        // n x rays.size(), primitive columns
  IntMatrix facet_normals;     // inward: <a, x> >= 0 on the cone
  IntMatrix equations;         // rows span the orthogonal complement of span(cone)
  IntVector interior_point;    // sum of the generators
  IntMatrix sublattice_basis;  // n x dim basis of N_cone = span ∩ Z^n

  /// Point lies in the cone.
  bool contains(const QVector& x) const;
  /// Point lies in the relative interior.
  bool contains_in_relative_interior(const QVector& x) const;
  /// Description used by the constraint solver.
  ConeDescription description() const;
};

/// A fan of rational cones in Z^n. Immutable once built; cones are stored by
/// increasing dimension, then lexicographically by ray indices, and are
/// addressed by their position in that order.
class Fan {
 public:
  int rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const Cone& cone(int id) const { return cones_.at(static_cast<std::size_t>(id)); }
  int cone_count() const { return static_cast<int>(cones_.size()); }

  /// Ids of the cones of codimension k, in storage order.
  const std::vector<int>& cones_of_codim(int k) const;
  /// Position of a cone inside cones_of_codim(codim(id)).
  int position_in_codim(int id) const { return position_.at(static_cast<std::size_t>(id)); }
  int codim(int id) const { return rank_ - cone(id).dim; }

  std::optional<int> find(const std::vector<int>& sorted_rays) const;
  int zero_cone() const { return 0; }
  const std::vector<int>& maximal_cones() const { return maximal_; }

  /// Faces of one dimension less / cones of one dimension more.
  const std::vector<int>& facets(int id) const { return facets_.at(static_cast<std::size_t>(id)); }
  const std::vector<int>& cofacets(int id) const { return cofacets_.at(static_cast<std::size_t>(id)); }
  /// Ray-set inclusion: `small` is a face of `big`.
  bool is_face(int small, int big) const;

  /// Cone whose relative interior contains x, if any.
  std::optional<int> cone_containing(const QVector& x) const;

  bool is_complete() const { return complete_; }
  bool is_simplicial() const { return simplicial_; }
  bool is_smooth() const { return smooth_; }

  /// Notes produced during construction, e.g. rescaled rays.
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Human readable id like "[0,2]".
  std::string cone_label(int id) const;

  friend Fan build_fan(int rank, std::vector<IntVector> rays,
                       const std::vector<std::vector<int>>& maximal_cones,
                       bool check_intersections);

 private:
  int rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> by_codim_;
  std::vector<int> position_;
  std::vector<int> maximal_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> cofacets_;
  bool complete_ = false;
  bool simplicial_ = false;
  bool smooth_ = false;
  std::vector<std::string> warnings_;
};

/// Builds and validates a fan from rays and maximal cones (ray-index sets).
/// Non-primitive rays are rescaled with a warning. Throws InvalidInput for
/// "not a fan", degenerate cones and malformed data. Pairwise intersection
/// checks can be skipped for fans derived from an already validated one.
Fan build_fan(int rank, std::vector<IntVector> rays,
              const std::vector<std::vector<int>>& maximal_cones,
              bool check_intersections = true);

/// Rewrites vectors given in ambient coordinates into coordinates with
/// respect to a basis (columns) of a sublattice; throws if a vector is not
/// in that sublattice.
std::vector<IntVector> rebase(const std::vector<IntVector>& vectors, const IntMatrix& basis);

/// Lattice point of sigma whose class generates N_sigma / N_tau ≅ Z and lies
/// on the sigma side. Requires tau a facet of sigma.
IntVector n_sigma_tau(const Fan& fan, int sigma, int tau);

/// Generator of M(sigma) (sigma of codimension 1) that is nonnegative on rho.
IntVector m_rho_sigma(const Fan& fan, int rho, int sigma);

/// Rows form a basis of M(tau) = tau^perp ∩ Z^n.
IntMatrix dual_sublattice_basis(const Fan& fan, int tau);

/// Star of a cone gamma pushed to N / N_gamma ≅ Z^(n - dim gamma).
struct StarQuotient {
  int gamma = 0;
  Fan fan;
  QuotientMap map;
  std::vector<int> to_original;    // quotient cone id -> cone of the fan
  std::vector<int> from_original;  // cone of the fan -> quotient cone id or -1
};

StarQuotient star_quotient(const Fan& fan, int gamma);

/// Classification of sigma ∩ (tau + v).
struct TranslatedIntersection {
  enum class Kind { Empty, Point, HigherDimensional };
  Kind kind = Kind::Empty;
  int dimension = -1;
  std::optional<QVector> point;
  /// Point case: the point lies in relint(sigma) and in relint(tau) + v.
  bool in_relative_interiors = false;
};

TranslatedIntersection intersect_translated(const Cone& sigma, const Cone& tau, const IntVector& v);

/// Certificate for a translated sublattice L_R + v against all cones.
struct GenericityCertificate {
  bool generic = false;
  /// Cones met in exactly one point (the set written Δ(v)), with the point.
  struct Meeting {
    int cone = 0;
    QVector point;
  };
  std::vector<Meeting> meeting;
  /// When not generic: a cone whose span together with L is a proper
  /// subspace containing v.
  std::optional<int> witness;
};

/// v is generic for L iff it avoids every proper subspace L_R + span(sigma).
/// `sublattice` has n rows and full column rank.
GenericityCertificate is_generic(const Fan& fan, const IntMatrix& sublattice, const IntVector& v);

/// Equivariant morphism given by a lattice map psi: N' -> N with every
/// source cone mapped into some target cone.
struct ToricMorphism {
  IntMatrix lattice_map;  // target.rank() x source.rank()
  Fan source;
  Fan target;
  std::vector<int> cone_image;  // smallest target cone containing psi(cone)

  /// psi ⊗ Q is surjective.
  bool is_dominant() const;
};

ToricMorphism make_morphism(IntMatrix lattice_map, Fan source, Fan target);

}  // namespace toric

#endif  // TORIC_FAN_HPP
