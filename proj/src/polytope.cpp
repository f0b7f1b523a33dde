#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>

namespace toric {

namespace {

using Index = Eigen::Index;

bool qlex_less(const QVector& a, const QVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

Integer lcm_of_denominators(const QVector& v) {
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i) {
    Integer d = denominator(v(i));
    l = l / gcd(l, d) * d;
  }
  return l;
}

/// Columns (den, den * p) for the cone over the points.
IntMatrix homogenize(const std::vector<QVector>& points, Index n) {
  IntMatrix g(n + 1, static_cast<Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    Integer den = lcm_of_denominators(points[j]);
    g(0, static_cast<Index>(j)) = den;
    for (Index i = 0; i < n; ++i) g(i + 1, static_cast<Index>(j)) = numerator(points[j](i) * Rational(den));
  }
  return g;
}

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

int affine_rank(const std::vector<QVector>& points) {
  if (points.empty()) return -1;
  QMatrix diffs(points.front().size(), static_cast<Index>(points.size()) - 1);
  for (std::size_t j = 1; j < points.size(); ++j) diffs.col(static_cast<Index>(j) - 1) = points[j] - points[0];
  return static_cast<int>(rank(diffs));
}

/// Normalized volume of conv(points) in Q^k, unit simplex of Z^k = 1.
Rational standard_volume(const std::vector<QVector>& points, int k) {
  if (points.empty() || affine_rank(points) < k) return 0;
  if (k == 0) return 1;
  if (k == 1) {
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [](const QVector& a, const QVector& b) { return a(0) < b(0); });
    return (*hi)(0) - (*lo)(0);
  }
  ConeDescription d = describe_cone(homogenize(points, k));
  const QVector& apex = points.front();
  Rational total = 0;
  for (Index f = 0; f < d.facet_normals.rows(); ++f) {
    IntVector a = d.facet_normals.row(f).tail(k).transpose();
    if (a.isZero()) continue;
    Integer c = content(a);
    Rational b = Rational(d.facet_normals(f, 0)) / Rational(c);
    IntVector normal = a / c;
    Rational height = to_rational(normal).dot(apex) + b;
    if (height == 0) continue;
    std::vector<QVector> face;
    for (int j : d.facet_generators[static_cast<std::size_t>(f)]) face.push_back(points[static_cast<std::size_t>(j)]);
    IntMatrix rows = kernel_basis(IntMatrix(normal.transpose())).transpose();
    total += height * normalized_volume(face, rows);
  }
  return total;
}

}  // namespace

Polytope Polytope::from_vertices(int n, const std::vector<QVector>& input) {
  Polytope p;
  p.ambient_rank_ = n;
  std::vector<QVector> points = input;
  for (const auto& x : points) {
    if (x.size() != n) throw InvalidInput("point has the wrong dimension");
  }
  std::sort(points.begin(), points.end(), qlex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return p;

  ConeDescription d = describe_cone(homogenize(points, n));
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (d.extreme[j]) p.vertices_.push_back(points[j]);
  }
  for (Index f = 0; f < d.facet_normals.rows(); ++f) {
    IntVector a = d.facet_normals.row(f).tail(n).transpose();
    if (a.isZero()) continue;
    Integer c = content(a);
    p.facets_.push_back({IntVector(a / c), Rational(d.facet_normals(f, 0)) / Rational(c)});
  }
  for (Index e = 0; e < d.equations.rows(); ++e) {
    IntVector a = d.equations.row(e).tail(n).transpose();
    if (a.isZero()) continue;
    Integer c = content(a);
    p.equations_.push_back({IntVector(a / c), -Rational(d.equations(e, 0)) / Rational(c)});
  }
  return p;
}

Polytope Polytope::from_inequalities(int n, const std::vector<Facet>& halfspaces) {
  for (const auto& h : halfspaces) {
    if (h.normal.size() != n) throw InvalidInput("inequality has the wrong dimension");
  }
  ConstraintSystem system(n);
  for (const auto& h : halfspaces) system.add(LinearConstraint::geq(to_rational(h.normal), -h.offset));

  IntMatrix normals = columns_to_matrix([&] {
    std::vector<IntVector> cols;
    for (const auto& h : halfspaces) cols.push_back(h.normal);
    return cols;
  }(), n);
  bool bounded = n == 0;
  if (!bounded && rank(normals) == n) bounded = describe_cone(normals).facet_normals.rows() == 0;
  if (!bounded) {
    if (system.feasible()) throw InvalidInput("polytope is unbounded");
    Polytope empty;
    empty.ambient_rank_ = n;
    return empty;
  }

  std::vector<QVector> found;
  const int m = static_cast<int>(halfspaces.size());
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pick.size()) == n) {
      QMatrix a(n, n);
      QVector b(n);
      for (int i = 0; i < n; ++i) {
        a.row(i) = to_rational(halfspaces[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].normal).transpose();
        b(i) = -halfspaces[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].offset;
      }
      if (rank(a) < n) return;
      QVector x = *solve(a, b);
      for (const auto& c : system.constraints()) {
        if (!c.satisfied_by(x)) return;
      }
      found.push_back(std::move(x));
      return;
    }
    for (int i = from; i < m; ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  if (n == 0) {
    QVector origin(0);
    bool ok = std::all_of(halfspaces.begin(), halfspaces.end(), [](const Facet& h) { return h.offset >= 0; });
    if (ok) found.push_back(origin);
  } else {
    choose(0);
  }
  return from_vertices(n, found);
}

int Polytope::dimension() const {
  if (empty()) return -1;
  IntMatrix eq(static_cast<Index>(equations_.size()), ambient_rank_);
  for (std::size_t i = 0; i < equations_.size(); ++i) eq.row(static_cast<Index>(i)) = equations_[i].normal.transpose();
  return ambient_rank_ - static_cast<int>(rank(eq));
}

bool Polytope::contains(const QVector& x) const {
  if (empty()) return false;
  for (const auto& f : facets_) {
    if (to_rational(f.normal).dot(x) < -f.offset) return false;
  }
  for (const auto& e : equations_) {
    if (to_rational(e.normal).dot(x) != e.value) return false;
  }
  return true;
}

bool Polytope::is_lattice_polytope() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const QVector& v) {
    for (Index i = 0; i < v.size(); ++i)
      if (!is_integral(v(i))) return false;
    return true;
  });
}

NormalFan normal_fan(const Polytope& p) {
  if (p.empty() || !p.equations().empty()) throw InvalidInput("polytope is not full-dimensional");
  const int n = p.ambient_rank();
  std::vector<IntVector> rays;
  for (const auto& f : p.facets()) rays.push_back(f.normal);
  auto tight = [&](const QVector& v, const Facet& f) { return to_rational(f.normal).dot(v) == -f.offset; };
  std::vector<std::vector<int>> cones;
  for (const auto& v : p.vertices()) {
    std::vector<int> c;
    for (std::size_t i = 0; i < p.facets().size(); ++i) {
      if (tight(v, p.facets()[i])) c.push_back(static_cast<int>(i));
    }
    cones.push_back(std::move(c));
  }
  NormalFan out{build_fan(n, rays, cones), {}};
  for (const Cone& c : out.fan.cones()) {
    std::vector<int> face;
    for (std::size_t j = 0; j < p.vertices().size(); ++j) {
      bool on = std::all_of(c.rays.begin(), c.rays.end(),
                            [&](int r) { return tight(p.vertices()[j], p.facets()[static_cast<std::size_t>(r)]); });
      if (on) face.push_back(static_cast<int>(j));
    }
    out.face_vertices.push_back(std::move(face));
  }
  return out;
}

DivisorPolytope polytope_from_divisor(const Fan& fan, const IntVector& a) {
  if (!fan.is_complete()) throw PreconditionError("fan not complete");
  if (a.size() != static_cast<Index>(fan.rays().size())) throw InvalidInput("need one coefficient per ray");
  std::vector<Facet> halfspaces;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) halfspaces.push_back({fan.rays()[i], Rational(a(static_cast<Index>(i)))});
  DivisorPolytope out{Polytope::from_inequalities(fan.rank(), halfspaces), false, {}, a};

  bool in_k = true;
  for (int rho : fan.maximal_cones()) {
    const Cone& c = fan.cone(rho);
    QMatrix sys = to_rational(IntMatrix(c.generators.transpose()));
    QVector rhs(static_cast<Index>(c.rays.size()));
    for (std::size_t j = 0; j < c.rays.size(); ++j) rhs(static_cast<Index>(j)) = -Rational(a(c.rays[j]));
    auto m = solve(sys, rhs);
    if (!m) { in_k = false; break; }
    for (std::size_t i = 0; i < halfspaces.size() && in_k; ++i) {
      in_k = to_rational(halfspaces[i].normal).dot(*m) >= -halfspaces[i].offset;
    }
    if (!in_k) break;
    out.cone_vertices.push_back(*m);
  }
  out.in_k = in_k;
  if (!in_k) out.cone_vertices.clear();
  return out;
}

Rational normalized_volume(const std::vector<QVector>& points, const IntMatrix& lattice_rows) {
  if (points.empty()) return 0;
  const Index k = lattice_rows.rows();
  QMatrix basis = to_rational(IntMatrix(lattice_rows.transpose()));
  std::vector<QVector> coords;
  for (const auto& p : points) {
    auto y = solve(basis, QVector(p - points.front()));
    if (!y) throw InvalidInput("points do not lie in a translate of the lattice span");
    coords.push_back(*y);
  }
  return standard_volume(coords, static_cast<int>(k));
}

namespace {

const std::vector<QVector>& require_in_k(const DivisorPolytope& p) {
  if (!p.in_k) throw PreconditionError("polytope is not in K(fan)");
  return p.cone_vertices;
}

std::size_t slot_of(const Fan& fan, int rho) {
  const auto& m = fan.maximal_cones();
  return static_cast<std::size_t>(std::find(m.begin(), m.end(), rho) - m.begin());
}

int some_maximal_above(const Fan& fan, int sigma) {
  while (!fan.cofacets(sigma).empty()) sigma = fan.cofacets(sigma).front();
  return sigma;
}

}  // namespace

Rational normalized_volume(const Fan& fan, const DivisorPolytope& p, int sigma) {
  const auto& verts = require_in_k(p);
  std::vector<QVector> face;
  for (int rho : fan.maximal_cones()) {
    if (fan.is_face(sigma, rho)) face.push_back(verts[slot_of(fan, rho)]);
  }
  return normalized_volume(face, dual_sublattice_basis(fan, sigma));
}

RationalWeight volume_weight(const Fan& fan, const DivisorPolytope& p, int k) {
  const auto& verts = require_in_k(p);
  if (k < 0 || k > fan.rank()) throw InvalidInput("codimension out of range");
  std::vector<Rational> vol(static_cast<std::size_t>(fan.cone_count()), Rational(0));
  auto vertex_of = [&](int sigma) -> const QVector& { return verts[slot_of(fan, some_maximal_above(fan, sigma))]; };
  for (int rho : fan.cones_of_codim(0)) vol[static_cast<std::size_t>(rho)] = 1;
  for (int j = 1; j <= k; ++j) {
    for (int sigma : fan.cones_of_codim(j)) {
      const QVector& apex = vertex_of(sigma);
      Rational total = 0;
      for (int up : fan.cofacets(sigma)) {
        Rational h = QVector(apex - vertex_of(up)).dot(to_rational(n_sigma_tau(fan, up, sigma)));
        if (h < 0) throw std::logic_error("negative height in volume recursion");
        total += h * vol[static_cast<std::size_t>(up)];
      }
      vol[static_cast<std::size_t>(sigma)] = total;
    }
  }
  RationalWeight w{k, QVector(static_cast<Index>(fan.cones_of_codim(k).size()))};
  Rational scale = Rational(factorial(k));
  for (int sigma : fan.cones_of_codim(k)) w.values(fan.position_in_codim(sigma)) = vol[static_cast<std::size_t>(sigma)] / scale;
  return w;
}

Integer count_lattice_points(const Polytope& p) {
  if (p.empty()) return 0;
  const int n = p.ambient_rank();
  std::vector<Integer> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rational mn = p.vertices().front()(i), mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v(i));
      mx = std::max(mx, v(i));
    }
    lo[static_cast<std::size_t>(i)] = ceil(mn);
    hi[static_cast<std::size_t>(i)] = floor(mx);
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return 0;
  }
  Integer count = 0;
  QVector x(n);
  for (int i = 0; i < n; ++i) x(i) = Rational(lo[static_cast<std::size_t>(i)]);
  while (true) {
    if (p.contains(x)) ++count;
    int i = 0;
    for (; i < n; ++i) {
      if (x(i) < Rational(hi[static_cast<std::size_t>(i)])) {
        x(i) += 1;
        break;
      }
      x(i) = Rational(lo[static_cast<std::size_t>(i)]);
    }
    if (i == n) break;
  }
  return count;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_rank() != q.ambient_rank()) throw InvalidInput("ambient ranks differ");
  std::vector<QVector> sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return Polytope::from_vertices(p.ambient_rank(), sums);
}

}  // namespace toric
