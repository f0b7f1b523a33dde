#include "toric/polyhedral.hpp"

#include "toric/lattice.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

using Index = Eigen::Index;

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

struct VectorLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

}  // namespace

ConeDescription describe_cone(const IntMatrix& generators) {
  const Index n = generators.rows();
  const int r = static_cast<int>(generators.cols());
  ConeDescription out;
  out.equations = kernel_basis(generators.transpose()).transpose();
  out.dim = n - out.equations.rows();
  out.extreme.assign(static_cast<std::size_t>(r), false);
  out.facet_normals.resize(0, n);
  if (out.dim == 0) return out;

  std::set<IntVector, VectorLess> seen;
  std::vector<IntVector> normals;
  IntMatrix system(n - 1, n);
  system.bottomRows(out.equations.rows()) = out.equations;
  for_each_subset(r, static_cast<int>(out.dim - 1), [&](const std::vector<int>& subset) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
      system.row(static_cast<Index>(i)) = generators.col(subset[i]).transpose();
    }
    IntMatrix k = kernel_basis(system);
    if (k.cols() != 1) return;
    IntVector a = primitive(IntVector(k.col(0)));
    bool pos = false, neg = false;
    for (int j = 0; j < r; ++j) {
      Integer s = a.dot(generators.col(j));
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) return;
    if (neg) a = -a;
    if (seen.insert(a).second) normals.push_back(a);
  });
  std::sort(normals.begin(), normals.end(), VectorLess());

  out.facet_normals.resize(static_cast<Index>(normals.size()), n);
  for (std::size_t f = 0; f < normals.size(); ++f) {
    out.facet_normals.row(static_cast<Index>(f)) = normals[f].transpose();
    std::vector<int> tight;
    for (int j = 0; j < r; ++j) {
      if (normals[f].dot(generators.col(j)) == 0) tight.push_back(j);
    }
    out.facet_generators.push_back(std::move(tight));
  }

  IntMatrix all(out.facet_normals.rows() + out.equations.rows(), n);
  all << out.facet_normals, out.equations;
  out.pointed = rank(all) == n;

  std::set<IntVector, VectorLess> directions;
  for (int j = 0; j < r; ++j) {
    IntVector g = generators.col(j);
    if (g.isZero()) continue;
    std::vector<Index> tight_rows;
    for (Index f = 0; f < out.facet_normals.rows(); ++f) {
      if (out.facet_normals.row(f).dot(g.transpose()) == 0) tight_rows.push_back(f);
    }
    IntMatrix t(static_cast<Index>(tight_rows.size()) + out.equations.rows(), n);
    for (std::size_t i = 0; i < tight_rows.size(); ++i) t.row(static_cast<Index>(i)) = out.facet_normals.row(tight_rows[i]);
    t.bottomRows(out.equations.rows()) = out.equations;
    if (rank(t) != n - 1) continue;
    if (!directions.insert(primitive(g)).second) continue;
    out.extreme[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

bool LinearConstraint::satisfied_by(const QVector& x) const {
  Rational s = a.dot(x);
  switch (kind) {
    case Kind::GreaterEqual: return s >= b;
    case Kind::Greater: return s > b;
    case Kind::Equal: return s == b;
  }
  return false;
}

ConstraintSystem& ConstraintSystem::add(LinearConstraint c) {
  if (c.a.size() != variables_) throw InvalidInput("constraint has the wrong number of variables");
  constraints_.push_back(std::move(c));
  return *this;
}

ConstraintSystem& ConstraintSystem::add_all(const ConstraintSystem& other) {
  for (const auto& c : other.constraints()) add(c);
  return *this;
}

namespace {

struct Row {
  QVector a;
  Rational b;
  bool strict = false;
  boost::dynamic_bitset<> history;
};

// Positive rescaling so that `a` becomes a primitive integer vector.
void normalize(Row& row) {
  Integer l = 1;
  for (Index i = 0; i < row.a.size(); ++i) {
    Integer d = denominator(row.a(i));
    l = l / gcd(l, d) * d;
  }
  Integer g = 0;
  for (Index i = 0; i < row.a.size(); ++i) g = gcd(g, numerator(row.a(i) * l));
  if (g == 0) return;
  Rational scale(l, g);
  row.a *= scale;
  row.b *= scale;
}

// Trivial row 0 (>=|>) b.
bool trivial_holds(const Row& row) { return row.strict ? row.b < 0 : row.b <= 0; }

bool fourier_motzkin(std::vector<Row> rows, Index variables) {
  std::vector<bool> alive(static_cast<std::size_t>(variables), true);
  int eliminated = 0;
  for (;;) {
    // Drop trivial rows and merge duplicates (keep the strongest bound).
    std::map<std::vector<std::string>, std::size_t> by_normal;
    std::vector<Row> kept;
    for (auto& row : rows) {
      if (row.a.isZero()) {
        if (!trivial_holds(row)) return false;
        continue;
      }
      normalize(row);
      std::vector<std::string> key;
      key.reserve(static_cast<std::size_t>(row.a.size()));
      for (Index i = 0; i < row.a.size(); ++i) key.push_back(to_string(row.a(i)));
      auto it = by_normal.find(key);
      if (it == by_normal.end()) {
        by_normal.emplace(std::move(key), kept.size());
        kept.push_back(std::move(row));
      } else {
        Row& other = kept[it->second];
        if (row.b > other.b || (row.b == other.b && row.strict && !other.strict)) other = std::move(row);
      }
    }
    rows = std::move(kept);
    if (rows.empty()) return true;

    // Variable minimizing the number of generated rows.
    Index best = -1;
    long long best_cost = 0;
    for (Index j = 0; j < variables; ++j) {
      if (!alive[static_cast<std::size_t>(j)]) continue;
      long long pos = 0, neg = 0;
      for (const auto& row : rows) {
        if (row.a(j) > 0) ++pos;
        else if (row.a(j) < 0) ++neg;
      }
      if (pos == 0 && neg == 0) {
        alive[static_cast<std::size_t>(j)] = false;
        continue;
      }
      long long cost = pos * neg - pos - neg;
      if (best < 0 || cost < best_cost) { best = j; best_cost = cost; }
    }
    if (best < 0) return true;  // unreachable: nonzero rows always involve a live variable
    alive[static_cast<std::size_t>(best)] = false;
    ++eliminated;

    std::vector<Row> next, pos, neg;
    for (auto& row : rows) {
      if (row.a(best) > 0) pos.push_back(std::move(row));
      else if (row.a(best) < 0) neg.push_back(std::move(row));
      else next.push_back(std::move(row));
    }
    // A lone-sided variable can always be chosen to satisfy its rows.
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        boost::dynamic_bitset<> h = p.history | q.history;
        if (static_cast<int>(h.count()) > eliminated + 1) continue;  // Chernikov: redundant
        Row combined;
        Rational fp = 1 / p.a(best);
        Rational fq = -1 / q.a(best);
        combined.a = p.a * fp + q.a * fq;
        combined.a(best) = 0;
        combined.b = p.b * fp + q.b * fq;
        combined.strict = p.strict || q.strict;
        combined.history = std::move(h);
        next.push_back(std::move(combined));
      }
    }
    rows = std::move(next);
  }
}

}  // namespace

bool ConstraintSystem::feasible() const {
  std::vector<LinearConstraint> eqs;
  std::vector<Row> rows;
  for (const auto& c : constraints_) {
    if (c.kind == LinearConstraint::Kind::Equal) eqs.push_back(c);
  }
  std::size_t inequality_count = 0;
  for (const auto& c : constraints_) {
    if (c.kind != LinearConstraint::Kind::Equal) ++inequality_count;
  }
  for (const auto& c : constraints_) {
    if (c.kind == LinearConstraint::Kind::Equal) continue;
    Row row{c.a, c.b, c.kind == LinearConstraint::Kind::Greater, boost::dynamic_bitset<>(inequality_count)};
    row.history.set(rows.size());
    rows.push_back(std::move(row));
  }

  // Substitute equalities away.
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    const QVector a = eqs[e].a;
    const Rational b = eqs[e].b;
    Index pivot = -1;
    for (Index j = 0; j < a.size(); ++j) {
      if (a(j) != 0) { pivot = j; break; }
    }
    if (pivot < 0) {
      if (b != 0) return false;
      continue;
    }
    auto eliminate = [&](QVector& ra, Rational& rb) {
      if (ra(pivot) == 0) return;
      Rational f = ra(pivot) / a(pivot);
      ra -= f * a;
      rb -= f * b;
      ra(pivot) = 0;
    };
    for (std::size_t k = e + 1; k < eqs.size(); ++k) eliminate(eqs[k].a, eqs[k].b);
    for (auto& row : rows) eliminate(row.a, row.b);
  }
  return fourier_motzkin(std::move(rows), variables_);
}

std::vector<LinearConstraint> ConstraintSystem::affine_hull() const {
  std::vector<LinearConstraint> hull;
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& c = constraints_[i];
    if (c.kind == LinearConstraint::Kind::Equal) {
      hull.push_back(c);
      continue;
    }
    if (c.kind == LinearConstraint::Kind::Greater) continue;
    ConstraintSystem probe(variables_);
    for (std::size_t k = 0; k < constraints_.size(); ++k) {
      if (k == i) probe.add(LinearConstraint::gt(c.a, c.b));
      else probe.add(constraints_[k]);
    }
    if (!probe.feasible()) hull.push_back(LinearConstraint::eq(c.a, c.b));
  }
  return hull;
}

int ConstraintSystem::dimension() const {
  if (!feasible()) return -1;
  auto hull = affine_hull();
  QMatrix m(static_cast<Index>(hull.size()), variables_);
  for (std::size_t i = 0; i < hull.size(); ++i) m.row(static_cast<Index>(i)) = hull[i].a.transpose();
  return static_cast<int>(variables_ - rank(m));
}

std::optional<QVector> ConstraintSystem::unique_point() const {
  if (dimension() != 0) return std::nullopt;
  auto hull = affine_hull();
  QMatrix m(static_cast<Index>(hull.size()), variables_);
  QVector rhs(static_cast<Index>(hull.size()));
  for (std::size_t i = 0; i < hull.size(); ++i) {
    m.row(static_cast<Index>(i)) = hull[i].a.transpose();
    rhs(static_cast<Index>(i)) = hull[i].b;
  }
  return solve(m, rhs);
}

ConstraintSystem cone_constraints(const ConeDescription& cone, Index n, const QVector* offset) {
  ConstraintSystem sys(n);
  for (Index f = 0; f < cone.facet_normals.rows(); ++f) {
    QVector a = to_rational(IntVector(cone.facet_normals.row(f).transpose()));
    Rational b = offset ? Rational(a.dot(*offset)) : Rational(0);
    sys.add(LinearConstraint::geq(std::move(a), std::move(b)));
  }
  for (Index e = 0; e < cone.equations.rows(); ++e) {
    QVector a = to_rational(IntVector(cone.equations.row(e).transpose()));
    Rational b = offset ? Rational(a.dot(*offset)) : Rational(0);
    sys.add(LinearConstraint::eq(std::move(a), std::move(b)));
  }
  return sys;
}

}  // namespace toric
