#ifndef TORIC_PRODUCT_HPP
#define TORIC_PRODUCT_HPP

// Fan displacement rule: torus-closure classes, diagonal and graph
// multiplicities, cup and cap products, pullbacks.

#include "toric/chow.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>

namespace toric {

/// How to choose the displacement vector v in the target lattice N.
struct Displacement {
  std::optional<IntVector> fixed;  // explicit v; rejected if not generic
  std::uint64_t seed = 0;          // sampling seed when no vector is given

  static Displacement automatic(std::uint64_t seed = 0) { return {std::nullopt, seed}; }
  static Displacement explicit_vector(IntVector v) { return {std::move(v), 0}; }
};

/// One transverse pair: sigma (source fan) meets tau + v (target fan) in a
/// single relative-interior point of the quotient by gamma.
struct DisplacementPair {
  int sigma = 0;
  int tau = 0;
  QVector point;
  Integer multiplicity;
};

struct DisplacementCertificate {
  int gamma = 0;   // cone of the source fan
  IntVector v;     // displacement in quotient coordinates
  std::vector<DisplacementPair> pairs;
};

/// Caches star quotients, the displacement vector and certificates for the
/// diagonal of a fan or the graph of a toric morphism.
class DisplacementRule {
 public:
  /// Diagonal rule on a complete fan.
  DisplacementRule(const Fan& fan, Displacement choice);
  /// Graph rule of a morphism of complete fans.
  DisplacementRule(const ToricMorphism& f, Displacement choice);

  const ToricMorphism& morphism() const { return *morphism_; }

  /// v in the target lattice. Auto mode samples and certifies it against
  /// every cone of the source fan on first use.
  const IntVector& displacement();

  /// All transverse pairs over gamma (a cone of the source fan), for every
  /// split of codim(gamma).
  const DisplacementCertificate& certificate(int gamma);

 private:
  struct Local {
    const StarQuotient* source = nullptr;
    const StarQuotient* target = nullptr;
    IntMatrix psi;  // induced map between the quotient lattices
  };

  const StarQuotient& source_star(int cone);
  const StarQuotient& target_star(int cone);
  Local local(int gamma);
  /// Functionals (rows, on N) whose simultaneous vanishing at v breaks
  /// genericity over gamma; one matrix per proper subspace.
  std::vector<IntMatrix> obstructions(int gamma);
  void choose_displacement();

  std::shared_ptr<const ToricMorphism> morphism_;
  Displacement choice_;
  std::optional<IntVector> v_;
  std::map<int, StarQuotient> source_stars_;
  std::map<int, StarQuotient> target_stars_;
  std::map<int, bool> checked_;
  std::map<int, DisplacementCertificate> certificates_;
};

DisplacementCertificate diagonal_multiplicities(const Fan& fan, int gamma, Displacement choice = {});
DisplacementCertificate graph_multiplicities(const ToricMorphism& f, int gamma, Displacement choice = {});

/// (c ∪ c')(gamma) = sum of m * c(sigma) * c'(tau).
template <typename Scalar>
Weight<Scalar> cup(DisplacementRule& rule, const Weight<Scalar>& c, const Weight<Scalar>& d);
template <typename Scalar>
Weight<Scalar> cup(const Fan& fan, const Weight<Scalar>& c, const Weight<Scalar>& d, Displacement choice = {});

/// c ∩ z for a cycle z on cones of codimension k >= codim(c); the result
/// lives on cones of codimension k - codim(c).
template <typename Scalar>
Cycle<Scalar> cap(DisplacementRule& rule, const Weight<Scalar>& c, const Cycle<Scalar>& z);
template <typename Scalar>
Cycle<Scalar> cap(const Fan& fan, const Weight<Scalar>& c, const Cycle<Scalar>& z, Displacement choice = {});

/// f^* c via the graph rule.
MinkowskiWeight pullback(DisplacementRule& rule, const MinkowskiWeight& c);
MinkowskiWeight pullback(const ToricMorphism& f, const MinkowskiWeight& c, Displacement choice = {});

/// f^* c for dominant f: c(tau) * [N : psi(N') + N_tau] when the smallest
/// cone tau containing psi(gamma') has the same codimension, else 0.
MinkowskiWeight pullback_dominant(const ToricMorphism& f, const MinkowskiWeight& c);

/// Class of the closure of the subtorus of a sublattice L (columns).
struct TorusClosure {
  CycleClass cycle;  // on cones of codimension rank(L)
  IntVector v;
  std::vector<GenericityCertificate::Meeting> meeting;
  std::vector<std::string> warnings;
};

TorusClosure torus_closure_class(const Fan& fan, const IntMatrix& sublattice, Displacement choice = {});

}  // namespace toric

#endif  // TORIC_PRODUCT_HPP
