#include "toric/fan.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace toric {

namespace {

using Index = Eigen::Index;

IntMatrix gather_columns(const std::vector<IntVector>& rays, const std::vector<int>& ids, Index n) {
  IntMatrix g(n, static_cast<Index>(ids.size()));
  for (std::size_t j = 0; j < ids.size(); ++j) g.col(static_cast<Index>(j)) = rays[static_cast<std::size_t>(ids[j])];
  return g;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes_sorted(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string ray_set_label(const std::vector<int>& rays) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rays.size(); ++i) os << (i ? "," : "") << rays[i];
  os << "]";
  return os.str();
}

// Functional a with a >= 0 on `first`, a <= 0 on `second`, vanishing on
// exactly the rays in `common` for both cones. Its existence shows that the
// two cones meet in cone(common).
bool separates(const IntVector& a, const Cone& first, const Cone& second, const std::vector<int>& common) {
  auto check = [&](const Cone& c, int sign) {
    for (std::size_t j = 0; j < c.rays.size(); ++j) {
      Integer s = sign * a.dot(c.generators.col(static_cast<Index>(j)));
      bool in_common = std::binary_search(common.begin(), common.end(), c.rays[j]);
      if (s < 0) return false;
      if ((s == 0) != in_common) return false;
    }
    return true;
  };
  return check(first, 1) && check(second, -1);
}

}  // namespace

bool Cone::contains(const QVector& x) const {
  for (Index f = 0; f < facet_normals.rows(); ++f) {
    if (to_rational(IntVector(facet_normals.row(f).transpose())).dot(x) < 0) return false;
  }
  for (Index e = 0; e < equations.rows(); ++e) {
    if (to_rational(IntVector(equations.row(e).transpose())).dot(x) != 0) return false;
  }
  return true;
}

bool Cone::contains_in_relative_interior(const QVector& x) const {
  for (Index f = 0; f < facet_normals.rows(); ++f) {
    if (to_rational(IntVector(facet_normals.row(f).transpose())).dot(x) <= 0) return false;
  }
  for (Index e = 0; e < equations.rows(); ++e) {
    if (to_rational(IntVector(equations.row(e).transpose())).dot(x) != 0) return false;
  }
  return true;
}

ConeDescription Cone::description() const {
  ConeDescription d;
  d.dim = dim;
  d.facet_normals = facet_normals;
  d.equations = equations;
  return d;
}

const std::vector<int>& Fan::cones_of_codim(int k) const {
  static const std::vector<int> empty;
  if (k < 0 || k > rank_) return empty;
  return by_codim_[static_cast<std::size_t>(k)];
}

std::optional<int> Fan::find(const std::vector<int>& sorted_rays) const {
  auto it = index_.find(sorted_rays);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Fan::is_face(int small, int big) const {
  if (small == big) return true;
  const Cone& s = cone(small);
  const Cone& b = cone(big);
  if (s.dim >= b.dim || !includes_sorted(b.rays, s.rays)) return false;
  for (int f : facets(big)) {
    if (is_face(small, f)) return true;
  }
  return false;
}

std::optional<int> Fan::cone_containing(const QVector& x) const {
  for (int id = 0; id < cone_count(); ++id) {
    if (cones_[static_cast<std::size_t>(id)].contains_in_relative_interior(x)) return id;
  }
  return std::nullopt;
}

std::string Fan::cone_label(int id) const { return ray_set_label(cone(id).rays); }

Fan build_fan(int rank, std::vector<IntVector> rays, const std::vector<std::vector<int>>& maximal_cones,
              bool check_intersections) {
  if (rank < 0) throw InvalidInput("negative lattice rank");
  Fan fan;
  fan.rank_ = rank;
  const Index n = rank;

  std::set<std::vector<std::string>> seen_rays;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    IntVector& r = rays[i];
    if (r.size() != n) throw InvalidInput("ray " + std::to_string(i) + " has the wrong length");
    if (r.isZero()) throw InvalidInput("ray " + std::to_string(i) + " is zero");
    IntVector p = primitive(r);
    if (p != r) {
      fan.warnings_.push_back("ray " + std::to_string(i) + " rescaled to its primitive generator");
      r = p;
    }
    std::vector<std::string> key;
    for (Index k = 0; k < n; ++k) key.push_back(to_string(r(k)));
    if (!seen_rays.insert(key).second) throw InvalidInput("duplicate ray " + std::to_string(i));
  }
  fan.rays_ = std::move(rays);
  if (maximal_cones.empty()) throw InvalidInput("a fan needs at least one cone");

  std::vector<bool> used(fan.rays_.size(), false);
  std::vector<std::vector<int>> inputs;
  for (const auto& mc : maximal_cones) {
    std::vector<int> s = mc;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InvalidInput("cone lists a ray twice");
    for (int r : s) {
      if (r < 0 || static_cast<std::size_t>(r) >= fan.rays_.size()) {
        throw InvalidInput("cone refers to unknown ray " + std::to_string(r));
      }
      used[static_cast<std::size_t>(r)] = true;
    }
    inputs.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) throw InvalidInput("ray " + std::to_string(i) + " does not belong to any cone");
  }

  // Describe every cone and all of its faces.
  std::map<std::vector<int>, ConeDescription> described;
  std::function<void(const std::vector<int>&)> visit = [&](const std::vector<int>& ids) {
    if (described.count(ids)) return;
    IntMatrix g = gather_columns(fan.rays_, ids, n);
    ConeDescription d = describe_cone(g);
    if (!d.pointed) throw InvalidInput("degenerate cone " + ray_set_label(ids) + ": contains a line");
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (!d.extreme[j]) {
        throw InvalidInput("not a fan: ray " + std::to_string(ids[j]) + " is not an extreme ray of cone " +
                           ray_set_label(ids));
      }
    }
    auto facet_sets = d.facet_generators;
    described.emplace(ids, std::move(d));
    for (const auto& local : facet_sets) {
      std::vector<int> sub;
      for (int j : local) sub.push_back(ids[static_cast<std::size_t>(j)]);
      visit(sub);
    }
  };
  for (const auto& s : inputs) visit(s);
  visit({});

  std::vector<std::pair<std::vector<int>, ConeDescription*>> order;
  for (auto& [ids, d] : described) order.emplace_back(ids, &d);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second->dim != b.second->dim) return a.second->dim < b.second->dim;
    return a.first < b.first;
  });

  fan.by_codim_.assign(static_cast<std::size_t>(rank + 1), {});
  for (const auto& [ids, d] : order) {
    Cone c;
    c.rays = ids;
    c.dim = static_cast<int>(d->dim);
    c.generators = gather_columns(fan.rays_, ids, n);
    c.facet_normals = d->facet_normals;
    c.equations = d->equations;
    c.interior_point = IntVector::Zero(n);
    for (Index j = 0; j < c.generators.cols(); ++j) c.interior_point += c.generators.col(j);
    c.sublattice_basis = saturate(c.generators);
    int id = static_cast<int>(fan.cones_.size());
    fan.index_.emplace(ids, id);
    fan.position_.push_back(static_cast<int>(fan.by_codim_[static_cast<std::size_t>(rank - c.dim)].size()));
    fan.by_codim_[static_cast<std::size_t>(rank - c.dim)].push_back(id);
    fan.cones_.push_back(std::move(c));
  }

  fan.facets_.assign(fan.cones_.size(), {});
  fan.cofacets_.assign(fan.cones_.size(), {});
  for (const auto& [ids, d] : order) {
    int id = fan.index_.at(ids);
    for (const auto& local : d->facet_generators) {
      std::vector<int> sub;
      for (int j : local) sub.push_back(ids[static_cast<std::size_t>(j)]);
      int f = fan.index_.at(sub);
      fan.facets_[static_cast<std::size_t>(id)].push_back(f);
      fan.cofacets_[static_cast<std::size_t>(f)].push_back(id);
    }
  }
  for (auto& v : fan.facets_) std::sort(v.begin(), v.end());
  for (auto& v : fan.cofacets_) std::sort(v.begin(), v.end());
  for (int id = 0; id < fan.cone_count(); ++id) {
    if (fan.cofacets_[static_cast<std::size_t>(id)].empty()) fan.maximal_.push_back(id);
  }

  if (check_intersections) {
    for (std::size_t i = 0; i < fan.maximal_.size(); ++i) {
      for (std::size_t j = i + 1; j < fan.maximal_.size(); ++j) {
        const int a = fan.maximal_[i], b = fan.maximal_[j];
        const Cone& ca = fan.cone(a);
        const Cone& cb = fan.cone(b);
        std::vector<int> common = intersect_sorted(ca.rays, cb.rays);
        auto shared = fan.find(common);
        const std::string what = "not a fan: cones " + ray_set_label(ca.rays) + " and " + ray_set_label(cb.rays);
        if (!shared || !fan.is_face(*shared, a) || !fan.is_face(*shared, b)) {
          throw InvalidInput(what + " share rays that do not form a common face");
        }
        // Cheap certificates first: supporting functionals of the common face.
        std::vector<IntVector> candidates;
        IntVector sum_a = IntVector::Zero(n), sum_b = IntVector::Zero(n);
        for (Index f = 0; f < ca.facet_normals.rows(); ++f) {
          IntVector nf = ca.facet_normals.row(f).transpose();
          bool tight = true;
          for (int r : common) tight = tight && nf.dot(fan.rays_[static_cast<std::size_t>(r)]) == 0;
          if (tight) { candidates.push_back(nf); sum_a += nf; }
        }
        for (Index f = 0; f < cb.facet_normals.rows(); ++f) {
          IntVector nf = cb.facet_normals.row(f).transpose();
          bool tight = true;
          for (int r : common) tight = tight && nf.dot(fan.rays_[static_cast<std::size_t>(r)]) == 0;
          if (tight) { candidates.push_back(IntVector(-nf)); sum_b += nf; }
        }
        candidates.push_back(sum_a);
        candidates.push_back(IntVector(-sum_b));
        candidates.push_back(IntVector(sum_a - sum_b));
        bool ok = std::any_of(candidates.begin(), candidates.end(),
                              [&](const IntVector& c) { return separates(c, ca, cb, common); });
        if (ok) continue;

        // Exact fallback: the intersection must stay inside span(common).
        ConstraintSystem both = cone_constraints(ca.description(), n);
        both.add_all(cone_constraints(cb.description(), n));
        const Cone& face = fan.cone(*shared);
        for (Index e = 0; e < face.equations.rows() && !ok; ++e) {
          QVector w = to_rational(IntVector(face.equations.row(e).transpose()));
          for (int sign : {1, -1}) {
            ConstraintSystem probe = both;
            probe.add(LinearConstraint::gt(QVector(w * Rational(sign)), 0));
            if (probe.feasible()) throw InvalidInput(what + " overlap outside their common face");
          }
        }
      }
    }
  }

  // Flags.
  fan.simplicial_ = true;
  for (const auto& c : fan.cones_) {
    if (static_cast<int>(c.rays.size()) != c.dim) fan.simplicial_ = false;
  }
  fan.smooth_ = fan.simplicial_;
  if (fan.smooth_) {
    for (int m : fan.maximal_) {
      if (!is_saturated(fan.cone(m).generators)) { fan.smooth_ = false; break; }
    }
  }
  bool complete = !fan.maximal_.empty();
  for (int m : fan.maximal_) complete = complete && fan.cone(m).dim == rank;
  if (complete && rank > 0) {
    for (int id : fan.cones_of_codim(1)) {
      if (fan.cofacets(id).size() != 2) { complete = false; break; }
    }
  }
  if (complete) {
    std::set<int> reached{fan.maximal_.front()};
    std::deque<int> queue{fan.maximal_.front()};
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (int f : fan.facets(c)) {
        if (fan.cone(f).dim != rank - 1) continue;
        for (int other : fan.cofacets(f)) {
          if (reached.insert(other).second) queue.push_back(other);
        }
      }
    }
    complete = reached.size() == fan.maximal_.size();
  }
  fan.complete_ = complete;
  return fan;
}

std::vector<IntVector> rebase(const std::vector<IntVector>& vectors, const IntMatrix& basis) {
  if (basis.rows() != basis.cols() || rank(basis) != basis.rows()) {
    throw InvalidInput("rebase basis must be a square matrix of full rank");
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != basis.rows()) throw InvalidInput("vector length does not match the rebase basis");
    auto y = solve_integer(basis, vectors[i]);
    if (!y) throw InvalidInput("vector " + std::to_string(i) + " does not lie in the rebased lattice");
    out.push_back(*y);
  }
  return out;
}

IntVector n_sigma_tau(const Fan& fan, int sigma, int tau) {
  const Cone& s = fan.cone(sigma);
  const Cone& t = fan.cone(tau);
  if (s.dim != t.dim + 1 || !fan.is_face(tau, sigma)) throw InvalidInput("not a facet pair");

  const IntMatrix& bs = s.sublattice_basis;
  IntMatrix y(bs.cols(), t.sublattice_basis.cols());
  for (Index j = 0; j < t.sublattice_basis.cols(); ++j) {
    auto col = solve_integer(bs, IntVector(t.sublattice_basis.col(j)));
    if (!col) throw std::logic_error("N_tau is not contained in N_sigma");
    y.col(j) = *col;
  }
  IntMatrix k = kernel_basis(y.transpose());
  if (k.cols() != 1) throw std::logic_error("N_sigma / N_tau is not of rank one");
  IntVector f = k.col(0);

  // Orient toward sigma using a generator outside tau.
  for (std::size_t j = 0; j < s.rays.size(); ++j) {
    if (std::binary_search(t.rays.begin(), t.rays.end(), s.rays[j])) continue;
    auto coords = solve_integer(bs, IntVector(s.generators.col(static_cast<Index>(j))));
    if (f.dot(*coords) < 0) f = -f;
    break;
  }
  IntMatrix row = f.transpose();
  auto unit = solve_integer(row, make_vector({1}));
  if (!unit) throw std::logic_error("functional on N_sigma is not primitive");
  IntVector w = bs * *unit;

  // Shift by elements of N_tau until the representative lies in sigma.
  Integer step = 0;
  for (int attempt = 0; attempt < 200; ++attempt) {
    IntVector candidate = w + step * t.interior_point;
    if (s.contains(to_rational(candidate))) return candidate;
    step = step == 0 ? Integer(1) : Integer(step * 2);
  }
  throw std::logic_error("could not move n_sigma_tau into sigma");
}

IntMatrix dual_sublattice_basis(const Fan& fan, int tau) {
  return kernel_basis(fan.cone(tau).generators.transpose()).transpose();
}

IntVector m_rho_sigma(const Fan& fan, int rho, int sigma) {
  if (fan.cone(sigma).dim != fan.rank() - 1 || fan.cone(rho).dim != fan.rank() || !fan.is_face(sigma, rho)) {
    throw InvalidInput("m_rho_sigma needs a maximal cone and one of its facets");
  }
  IntMatrix m = dual_sublattice_basis(fan, sigma);
  IntVector u = m.row(0).transpose();
  if (u.dot(fan.cone(rho).interior_point) < 0) u = -u;
  return u;
}

StarQuotient star_quotient(const Fan& fan, int gamma) {
  StarQuotient out;
  out.gamma = gamma;
  out.map = quotient_by(fan.cone(gamma).sublattice_basis);
  const int qn = static_cast<int>(out.map.projection.rows());

  const std::vector<int>& links = fan.cofacets(gamma);
  std::vector<IntVector> rays;
  for (int rho : links) rays.push_back(primitive(IntVector(out.map.projection * fan.cone(rho).interior_point)));

  auto quotient_rays = [&](int sigma) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (fan.is_face(links[i], sigma)) ids.push_back(static_cast<int>(i));
    }
    return ids;
  };

  std::vector<std::vector<int>> maximal;
  for (int m : fan.maximal_cones()) {
    if (fan.is_face(gamma, m)) maximal.push_back(quotient_rays(m));
  }
  out.fan = build_fan(qn, rays, maximal, false);

  out.from_original.assign(static_cast<std::size_t>(fan.cone_count()), -1);
  out.to_original.assign(static_cast<std::size_t>(out.fan.cone_count()), -1);
  for (int sigma = 0; sigma < fan.cone_count(); ++sigma) {
    if (!fan.is_face(gamma, sigma)) continue;
    auto q = out.fan.find(quotient_rays(sigma));
    if (!q) throw std::logic_error("star cone has no image in the quotient fan");
    out.from_original[static_cast<std::size_t>(sigma)] = *q;
    out.to_original[static_cast<std::size_t>(*q)] = sigma;
  }
  return out;
}

TranslatedIntersection intersect_translated(const Cone& sigma, const Cone& tau, const IntVector& v) {
  const Index n = v.size();
  QVector offset = to_rational(v);
  ConstraintSystem sys = cone_constraints(sigma.description(), n);
  sys.add_all(cone_constraints(tau.description(), n, &offset));
  TranslatedIntersection out;
  out.dimension = sys.dimension();
  if (out.dimension < 0) {
    out.kind = TranslatedIntersection::Kind::Empty;
  } else if (out.dimension == 0) {
    out.kind = TranslatedIntersection::Kind::Point;
    out.point = sys.unique_point();
    out.in_relative_interiors = sigma.contains_in_relative_interior(*out.point) &&
                                tau.contains_in_relative_interior(QVector(*out.point - offset));
  } else {
    out.kind = TranslatedIntersection::Kind::HigherDimensional;
  }
  return out;
}

GenericityCertificate is_generic(const Fan& fan, const IntMatrix& sublattice, const IntVector& v) {
  const Index n = fan.rank();
  if (sublattice.rows() != n || v.size() != n) throw InvalidInput("sublattice / vector dimension mismatch");
  if (rank(sublattice) != sublattice.cols()) throw InvalidInput("sublattice generators are not independent");
  const Index d = sublattice.cols();

  GenericityCertificate cert;
  for (int id = 0; id < fan.cone_count(); ++id) {
    const Cone& c = fan.cone(id);
    IntMatrix m(n, d + c.generators.cols());
    m << sublattice, c.generators;
    Index r = rank(m);
    if (r == n) continue;
    IntMatrix mv(n, m.cols() + 1);
    mv << m, v;
    if (rank(mv) == r) {
      cert.generic = false;
      cert.witness = id;
      return cert;
    }
  }
  cert.generic = true;
  for (int id : fan.cones_of_codim(static_cast<int>(d))) {
    const Cone& c = fan.cone(id);
    IntMatrix m(n, c.sublattice_basis.cols() + d);
    m << c.sublattice_basis, -sublattice;
    if (m.cols() != n || determinant(m) == 0) continue;
    auto coeffs = solve(to_rational(m), to_rational(v));
    QVector x = to_rational(c.sublattice_basis) * coeffs->head(c.sublattice_basis.cols());
    if (c.contains(x)) cert.meeting.push_back({id, x});
  }
  return cert;
}

bool ToricMorphism::is_dominant() const { return rank(lattice_map) == target.rank(); }

ToricMorphism make_morphism(IntMatrix lattice_map, Fan source, Fan target) {
  if (lattice_map.rows() != target.rank() || lattice_map.cols() != source.rank()) {
    throw InvalidInput("lattice map has the wrong shape");
  }
  ToricMorphism f{std::move(lattice_map), std::move(source), std::move(target), {}};
  for (int id = 0; id < f.source.cone_count(); ++id) {
    const Cone& c = f.source.cone(id);
    QVector p = to_rational(IntVector(f.lattice_map * c.interior_point));
    auto image = f.target.cone_containing(p);
    bool ok = image.has_value();
    for (Index j = 0; ok && j < c.generators.cols(); ++j) {
      ok = f.target.cone(*image).contains(to_rational(IntVector(f.lattice_map * c.generators.col(j))));
    }
    if (!ok) throw InvalidInput("lattice map does not send cone " + f.source.cone_label(id) + " into a cone");
    f.cone_image.push_back(*image);
  }
  return f;
}

}  // namespace toric
