#include "toric/chow.hpp"
#include "toric/polytope.hpp"

#include <set>

namespace toric {

Fan hypersimplex_fan(int k, int n) {
  if (n < 2 || n > 7 || k < 1 || k > n - 1) throw InvalidInput("hypersimplex parameters out of range");
  std::vector<QVector> vertices;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<int>(k)) continue;
    QVector v = QVector::Zero(n - 1);
    for (int i = 0; i < n - 1; ++i)
      if (mask & (1u << i)) v(i) = 1;
    vertices.push_back(v);
  }
  return normal_fan(Polytope::from_vertices(n - 1, vertices)).fan;
}

namespace {

// Face label (I, J) of a cone: rays -e_i put i in I, rays e_j put j in J.
// The last coordinate enters through (1,...,1) = -e_n and (-1,...,-1) = e_n.
struct Label {
  std::set<int> I, J;
  bool operator<(const Label& o) const { return std::tie(I, J) < std::tie(o.I, o.J); }
};

Label label_of(const Fan& fan, int cone, int n) {
  Label l;
  for (int r : fan.cone(cone).rays) {
    const IntVector& v = fan.rays()[static_cast<std::size_t>(r)];
    int nonzero = 0, where = -1;
    for (int i = 0; i < n - 1; ++i)
      if (v(i) != 0) { ++nonzero; where = i; }
    if (nonzero == 1) {
      (v(where) < 0 ? l.I : l.J).insert(where);
    } else if (nonzero == n - 1) {
      (v(0) > 0 ? l.I : l.J).insert(n - 1);
    } else {
      throw InvalidInput("fan is not a hypersimplex fan");
    }
  }
  return l;
}

}  // namespace

bool verify_hypersimplex_relations(int k, int n, const Fan& fan, const MinkowskiWeight& w) {
  const int d = n - 1 - w.codim;  // codimension of the faces carrying the weight
  std::map<Label, Integer> value;
  for (int c : fan.cones_of_codim(w.codim)) value[label_of(fan, c, n)] = value_at(fan, w, c);
  auto c = [&](std::set<int> I, std::set<int> J) -> const Integer& {
    auto it = value.find(Label{std::move(I), std::move(J)});
    if (it == value.end()) throw std::logic_error("missing hypersimplex face");
    return it->second;
  };
  auto plus = [](std::set<int> s, int x) { s.insert(x); return s; };

  bool relations = true;
  if (d >= 1) {
    for (int lower : fan.cones_of_codim(w.codim + 1)) {
      Label f = label_of(fan, lower, n);
      const int i = static_cast<int>(f.I.size()), j = static_cast<int>(f.J.size());
      for (int r = 0; r < n && relations; ++r) {
        for (int s = 0; s < n && relations; ++s) {
          if (r == s || f.I.count(r) || f.J.count(r) || f.I.count(s) || f.J.count(s)) continue;
          if (i < k - 1 && j < n - k - 1) {
            relations = c(plus(f.I, r), f.J) + c(f.I, plus(f.J, s)) == c(plus(f.I, s), f.J) + c(f.I, plus(f.J, r));
          } else if (i == k - 1 && j < n - k - 1) {
            relations = c(f.I, plus(f.J, s)) == c(f.I, plus(f.J, r));
          } else if (i < k - 1 && j == n - k - 1) {
            relations = c(plus(f.I, r), f.J) == c(plus(f.I, s), f.J);
          }
        }
      }
    }
  }
  bool balanced = is_weight(fan, w).balanced;
  if (balanced != relations) throw std::logic_error("hypersimplex relations disagree with balancing");
  return relations;
}

}  // namespace toric
