#include "toric/generators.hpp"

#include "toric/chow.hpp"
#include "toric/polytope.hpp"

namespace toric {

namespace {

FanData from_fan(const Fan& f) {
  FanData d;
  d.rank = f.rank();
  d.rays = f.rays();
  for (int m : f.maximal_cones()) d.max_cones.push_back(f.cone(m).rays);
  return d;
}

void expect_params(const std::string& name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count) {
    throw InvalidInput("generator '" + name + "' expects " + std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

Fan make_fan(const FanData& data) {
  std::vector<IntVector> rays = data.rebase ? rebase(data.rays, *data.rebase) : data.rays;
  return build_fan(data.rank, std::move(rays), data.max_cones);
}

FanData projective_space_data(int n) {
  if (n < 1) throw InvalidInput("projective space needs n >= 1");
  FanData d;
  d.rank = n;
  for (int i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e(i) = 1;
    d.rays.push_back(e);
  }
  d.rays.push_back(IntVector::Constant(n, Integer(-1)));
  for (int skip = n; skip >= 0; --skip) {
    std::vector<int> c;
    for (int i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    d.max_cones.push_back(c);
  }
  return d;
}

FanData product_of_p1_data(int copies) {
  if (copies < 1) throw InvalidInput("need at least one factor");
  FanData d;
  d.rank = copies;
  for (int i = 0; i < copies; ++i) {
    IntVector e = IntVector::Zero(copies);
    e(i) = 1;
    d.rays.push_back(e);
    d.rays.push_back(IntVector(-e));
  }
  for (unsigned signs = 0; signs < (1u << copies); ++signs) {
    std::vector<int> c;
    for (int i = 0; i < copies; ++i) c.push_back(2 * i + ((signs >> i) & 1u ? 1 : 0));
    d.max_cones.push_back(c);
  }
  return d;
}

FanData hirzebruch_data(int m) {
  if (m < 0) throw InvalidInput("Hirzebruch parameter must be nonnegative");
  FanData d;
  d.rank = 2;
  d.rays = {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, m}), make_vector({0, -1})};
  d.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return d;
}

FanData hypersimplex_data(int k, int n) { return from_fan(hypersimplex_fan(k, n)); }

FanData cube_fan_data(int k) {
  if (k < 0) throw InvalidInput("cube fan parameter must be nonnegative");
  FanData d;
  d.rank = 3;
  // Vertex index bits: x, y, z sign (bit set = negative).
  for (int idx = 0; idx < 8; ++idx) {
    long long x = idx & 1 ? -1 : 1, y = idx & 2 ? -1 : 1, z = idx & 4 ? -1 : 1;
    if (idx == 0) z = 2LL * k + 1;
    d.rays.push_back(make_vector({x, y, z}));
  }
  for (int axis = 0; axis < 3; ++axis) {
    for (int side = 0; side < 2; ++side) {
      std::vector<int> c;
      for (int idx = 0; idx < 8; ++idx)
        if (((idx >> axis) & 1) == side) c.push_back(idx);
      d.max_cones.push_back(c);
    }
  }
  IntMatrix b(3, 3);
  b << 2, 0, 1, 0, 2, 1, 0, 0, 1;
  d.rebase = b;
  return d;
}

FanData pyramid_fan_data() {
  std::vector<QVector> vertices;
  for (auto v : {make_vector({0, 0, 1}), make_vector({2, 1, -1}), make_vector({1, -1, -1}), make_vector({-3, -2, -1}),
                 make_vector({-1, 1, -1})}) {
    vertices.push_back(to_rational(v));
  }
  return from_fan(normal_fan(Polytope::from_vertices(3, vertices)).fan);
}

FanData blown_up_plane_data() {
  FanData d;
  d.rank = 2;
  d.rays = {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1}), make_vector({1, 1})};
  d.max_cones = {{0, 3}, {1, 3}, {1, 2}, {0, 2}};
  return d;
}

FanData generate(const std::string& name, const std::vector<int>& params) {
  if (name == "p1") { expect_params(name, params, 0); return projective_space_data(1); }
  if (name == "p2") { expect_params(name, params, 0); return projective_space_data(2); }
  if (name == "pn") { expect_params(name, params, 1); return projective_space_data(params[0]); }
  if (name == "p1xp1") { expect_params(name, params, 0); return product_of_p1_data(2); }
  if (name == "p1-power") { expect_params(name, params, 1); return product_of_p1_data(params[0]); }
  if (name == "hirzebruch") { expect_params(name, params, 1); return hirzebruch_data(params[0]); }
  if (name == "hypersimplex") { expect_params(name, params, 2); return hypersimplex_data(params[0], params[1]); }
  if (name == "example13") { expect_params(name, params, 1); return cube_fan_data(params[0]); }
  if (name == "example56") { expect_params(name, params, 0); return pyramid_fan_data(); }
  if (name == "blowup-p2") { expect_params(name, params, 0); return blown_up_plane_data(); }
  throw InvalidInput("unknown generator '" + name + "'");
}

}  // namespace toric
