#include "toric/lattice.hpp"

#include <sstream>
#include <utility>

namespace toric {

namespace {

using Index = Eigen::Index;

// Quotient rounded toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void row_axpy(IntMatrix& m, Index target, Index source, const Integer& q) {
  if (q == 0) return;
  for (Index j = 0; j < m.cols(); ++j) {
    if (m(source, j) != 0) m(target, j) -= q * m(source, j);
  }
}

void col_axpy(IntMatrix& m, Index target, Index source, const Integer& q) {
  if (q == 0) return;
  for (Index i = 0; i < m.rows(); ++i) {
    if (m(i, source) != 0) m(i, target) -= q * m(i, source);
  }
}

struct SmithWork {
  IntMatrix D, U, V;
  bool track;

  void swap_rows(Index a, Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    if (track) U.row(a).swap(U.row(b));
  }
  void swap_cols(Index a, Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    if (track) V.col(a).swap(V.col(b));
  }
  void row_op(Index target, Index source, const Integer& q) {
    row_axpy(D, target, source, q);
    if (track) row_axpy(U, target, source, q);
  }
  void col_op(Index target, Index source, const Integer& q) {
    col_axpy(D, target, source, q);
    if (track) col_axpy(V, target, source, q);
  }
  void add_row(Index target, Index source) {
    D.row(target) += D.row(source);
    if (track) U.row(target) += U.row(source);
  }

  // Moves the smallest nonzero entry of row t / column t (pivot included)
  // onto the diagonal. Returns false if both are zero.
  bool pick_local_pivot(Index t) {
    Index bi = -1, bj = -1;
    Integer best = 0;
    auto consider = [&](Index i, Index j) {
      if (D(i, j) == 0) return;
      Integer a = abs(D(i, j));
      if (bi < 0 || a < best) { best = a; bi = i; bj = j; }
    };
    for (Index i = t; i < D.rows(); ++i) consider(i, t);
    for (Index j = t + 1; j < D.cols(); ++j) consider(t, j);
    if (bi < 0) return false;
    if (bj == t) swap_rows(t, bi); else swap_cols(t, bj);
    return true;
  }

  SmithDecomposition run() {
    const Index rows = D.rows(), cols = D.cols();
    for (Index t = 0; t < std::min(rows, cols); ++t) {
      // Global minimum of the trailing block.
      Index bi = -1, bj = -1;
      Integer best = 0;
      for (Index j = t; j < cols; ++j) {
        for (Index i = t; i < rows; ++i) {
          if (D(i, j) == 0) continue;
          Integer a = abs(D(i, j));
          if (bi < 0 || a < best) { best = a; bi = i; bj = j; }
        }
      }
      if (bi < 0) break;
      swap_rows(t, bi);
      swap_cols(t, bj);

      for (;;) {
        bool clean = true;
        for (Index i = t + 1; i < rows; ++i) {
          if (D(i, t) == 0) continue;
          row_op(i, t, D(i, t) / D(t, t));
          if (D(i, t) != 0) clean = false;
        }
        for (Index j = t + 1; j < cols; ++j) {
          if (D(t, j) == 0) continue;
          col_op(j, t, D(t, j) / D(t, t));
          if (D(t, j) != 0) clean = false;
        }
        if (!clean) {
          pick_local_pivot(t);
          continue;
        }
        // Divisibility: fold an offending row into the pivot row and redo.
        Index offender = -1;
        for (Index i = t + 1; i < rows && offender < 0; ++i) {
          for (Index j = t + 1; j < cols; ++j) {
            if (D(i, j) % D(t, t) != 0) { offender = i; break; }
          }
        }
        if (offender < 0) break;
        add_row(t, offender);
      }
      if (D(t, t) < 0) {
        D.row(t) = -D.row(t);
        if (track) U.row(t) = -U.row(t);
      }
    }
    return {std::move(U), std::move(D), std::move(V)};
  }
};

SmithDecomposition smith(const IntMatrix& m, bool track) {
  SmithWork w{m, IntMatrix(), IntMatrix(), track};
  if (track) {
    w.U = IntMatrix::Identity(m.rows(), m.rows());
    w.V = IntMatrix::Identity(m.cols(), m.cols());
  }
  return w.run();
}

HermiteDecomposition hermite(const IntMatrix& m, bool track) {
  HermiteDecomposition out;
  out.H = m;
  IntMatrix& H = out.H;
  const Index rows = H.rows(), cols = H.cols();
  if (track) out.U = IntMatrix::Identity(cols, cols);

  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    H.col(a).swap(H.col(b));
    if (track) out.U.col(a).swap(out.U.col(b));
  };
  auto col_op = [&](Index target, Index source, const Integer& q) {
    col_axpy(H, target, source, q);
    if (track) col_axpy(out.U, target, source, q);
  };

  Index r = 0;
  for (Index i = 0; i < rows && r < cols; ++i) {
    for (;;) {
      Index p = -1;
      Integer best = 0;
      for (Index j = r; j < cols; ++j) {
        if (H(i, j) == 0) continue;
        Integer a = abs(H(i, j));
        if (p < 0 || a < best) { best = a; p = j; }
      }
      if (p < 0) break;
      bool clean = true;
      for (Index j = r; j < cols; ++j) {
        if (j == p || H(i, j) == 0) continue;
        col_op(j, p, H(i, j) / H(i, p));
        if (H(i, j) != 0) clean = false;
      }
      if (!clean) continue;
      swap_cols(r, p);
      if (H(i, r) < 0) {
        H.col(r) = -H.col(r);
        if (track) out.U.col(r) = -out.U.col(r);
      }
      for (Index j = 0; j < r; ++j) {
        if (H(i, j) >= 0 && H(i, j) < H(i, r)) continue;
        col_op(j, r, floor_div(H(i, j), H(i, r)));
      }
      ++r;
      break;
    }
  }
  out.rank = r;
  return out;
}

}  // namespace

Index SmithDecomposition::rank() const {
  Index r = 0;
  while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (Index i = 0; i < rank(); ++i) out.push_back(D(i, i));
  return out;
}

std::string to_string(const GroupStructure& g) {
  std::ostringstream os;
  bool first = true;
  if (g.rank > 0) {
    os << "Z";
    if (g.rank > 1) os << "^" << g.rank;
    first = false;
  }
  for (const auto& t : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

SmithDecomposition smith_normal_form(const IntMatrix& m) { return smith(m, true); }

HermiteDecomposition hermite_normal_form(const IntMatrix& m) { return hermite(m, true); }

IntMatrix kernel_basis(const IntMatrix& m) {
  HermiteDecomposition h = hermite(m, true);
  return h.U.rightCols(m.cols() - h.rank);
}

GroupStructure cokernel_structure(const IntMatrix& m) {
  SmithDecomposition s = smith(m, false);
  GroupStructure g;
  g.rank = m.rows() - s.rank();
  for (const auto& d : s.invariant_factors()) {
    if (d != 1) g.torsion.push_back(d);
  }
  return g;
}

std::optional<Integer> lattice_index(const IntMatrix& generators) {
  HermiteDecomposition h = hermite(generators, false);
  if (h.rank < generators.rows()) return std::nullopt;
  Integer index = 1;
  for (Index i = 0; i < generators.rows(); ++i) index *= h.H(i, i);
  return index;
}

IntMatrix saturate(const IntMatrix& generators) {
  IntMatrix complement = kernel_basis(generators.transpose());
  return kernel_basis(complement.transpose());
}

bool is_saturated(const IntMatrix& generators) {
  SmithDecomposition s = smith(generators, false);
  for (const auto& d : s.invariant_factors()) {
    if (d != 1) return false;
  }
  return true;
}

Index rank(const IntMatrix& m) {
  // Bareiss elimination; every intermediate entry stays integral.
  IntMatrix a = m;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  Integer prev = 1;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) { p = i; break; }
    }
    if (p < 0) continue;
    a.row(r).swap(a.row(p));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

Index rank(const QMatrix& m) {
  std::vector<Index> pivots;
  row_echelon(m, &pivots);
  return static_cast<Index>(pivots.size());
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Index p = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) { p = i; break; }
      }
      if (p < 0) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

QMatrix row_echelon(const QMatrix& m, std::vector<Index>* pivots) {
  QMatrix a = m;
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> piv;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) { p = i; break; }
    }
    if (p < 0) continue;
    a.row(r).swap(a.row(p));
    Rational inv = 1 / a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (Index j = c; j < cols; ++j) {
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      }
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  aug << a, b;
  std::vector<Index> pivots;
  QMatrix e = row_echelon(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  QVector x = QVector::Zero(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x(pivots[i]) = e(static_cast<Index>(i), a.cols());
  }
  return x;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  SmithDecomposition s = smith_normal_form(a);
  IntVector y = s.U * b;
  const Index r = s.rank();
  IntVector z = IntVector::Zero(a.cols());
  for (Index i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (y(i) % s.D(i, i) != 0) return std::nullopt;
      z(i) = y(i) / s.D(i, i);
    } else if (y(i) != 0) {
      return std::nullopt;
    }
  }
  return IntVector(s.V * z);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const Index n = u.rows();
  if (u.cols() != n) throw InvalidInput("inverse of a non-square matrix");
  QMatrix aug(n, 2 * n);
  aug << to_rational(u), QMatrix::Identity(n, n);
  std::vector<Index> pivots;
  QMatrix e = row_echelon(aug, &pivots);
  if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] >= n)) {
    throw InvalidInput("matrix is singular");
  }
  IntMatrix inv(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Rational& q = e(i, n + j);
      if (!is_integral(q)) throw InvalidInput("matrix is not unimodular");
      inv(i, j) = numerator(q);
    }
  }
  return inv;
}

QuotientMap quotient_by(const IntMatrix& saturated_basis) {
  const Index n = saturated_basis.rows();
  SmithDecomposition s = smith_normal_form(saturated_basis);
  const Index d = s.rank();
  for (Index i = 0; i < d; ++i) {
    if (s.D(i, i) != 1) throw InvalidInput("quotient by a non-saturated sublattice");
  }
  QuotientMap q;
  q.projection = s.U.bottomRows(n - d);
  q.section = unimodular_inverse(s.U).rightCols(n - d);
  return q;
}

}  // namespace toric
