#ifndef TORIC_LATTICE_HPP
#define TORIC_LATTICE_HPP

// Exact integer linear algebra: Smith and Hermite normal forms, integer
// kernels, cokernels, sublattice indices and saturation.

#include "toric/scalar.hpp"

#include <optional>
#include <vector>

namespace toric {

/// U * M * V == D with U, V unimodular and D diagonal, d1 | d2 | ... | dr,
/// zeros after the rank.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  Eigen::Index rank() const;
  /// Nonzero diagonal entries of D in order.
  std::vector<Integer> invariant_factors() const;
};

/// Column-style Hermite normal form: M * U == H, H lower triangular in
/// column-echelon form. Pivots are positive and every entry to the left of a
/// pivot in its row lies in [0, pivot). The first `rank` columns of H are
/// nonzero, the remaining columns of U span the integer kernel of M.
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;
  Eigen::Index rank = 0;
};

/// rank and invariant factors (> 1, each dividing the next) of a finitely
/// generated abelian group.
struct GroupStructure {
  Eigen::Index rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

std::string to_string(const GroupStructure& g);

SmithDecomposition smith_normal_form(const IntMatrix& m);

HermiteDecomposition hermite_normal_form(const IntMatrix& m);

/// Columns form a basis of {x integer : M x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Z^rows / (column span of M).
GroupStructure cokernel_structure(const IntMatrix& m);

/// Index of the lattice spanned by the columns inside Z^rows; nullopt when
/// the columns do not have full rank (infinite index).
std::optional<Integer> lattice_index(const IntMatrix& generators);

/// Basis (as columns) of the saturation (span_Q of the columns) ∩ Z^n.
IntMatrix saturate(const IntMatrix& generators);

/// True when the column span is already saturated.
bool is_saturated(const IntMatrix& generators);

Eigen::Index rank(const IntMatrix& m);
Eigen::Index rank(const QMatrix& m);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const IntMatrix& m);

/// Reduced row echelon form over Q; `pivots` receives the pivot columns.
QMatrix row_echelon(const QMatrix& m, std::vector<Eigen::Index>* pivots = nullptr);

/// Some rational solution of A x = b, or nullopt if the system is
/// inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

/// Some integer solution of A x = b, or nullopt if none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Identification Z^n / L ≅ Z^(n-d) for a saturated rank-d sublattice L.
/// projection * basis(L) == 0, projection * section == identity, and
/// [basis(L) | section] is unimodular.
struct QuotientMap {
  IntMatrix projection;  // (n-d) x n
  IntMatrix section;     // n x (n-d)
};

QuotientMap quotient_by(const IntMatrix& saturated_basis);

}  // namespace toric

#endif  // TORIC_LATTICE_HPP
