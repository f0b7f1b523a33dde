#include "toric/chow.hpp"

#include <deque>
#include <stdexcept>

namespace toric {

namespace {

void require_complete(const Fan& fan) {
  if (!fan.is_complete()) throw PreconditionError("fan not complete");
}

void require_codim(const Fan& fan, int k) {
  if (k < 0 || k > fan.rank()) throw InvalidInput("codimension out of range");
}

}  // namespace

MinkowskiWeight to_integer(const RationalWeight& w) {
  MinkowskiWeight out{w.codim, IntVector(w.values.size())};
  for (Eigen::Index i = 0; i < w.values.size(); ++i) {
    if (!is_integral(w.values(i))) throw InvalidInput("weight has a non-integral value");
    out.values(i) = numerator(w.values(i));
  }
  return out;
}

MinkowskiWeight constant_weight(const Fan& fan, int codim, const Integer& value) {
  require_codim(fan, codim);
  auto size = static_cast<Eigen::Index>(fan.cones_of_codim(codim).size());
  return {codim, IntVector::Constant(size, value)};
}

MinkowskiWeight zero_weight(const Fan& fan, int codim) { return constant_weight(fan, codim, 0); }

CycleClass cone_cycle(const Fan& fan, int sigma) {
  int k = fan.codim(sigma);
  CycleClass z{k, IntVector::Zero(static_cast<Eigen::Index>(fan.cones_of_codim(k).size()))};
  z.coefficients(fan.position_in_codim(sigma)) = 1;
  return z;
}

RelationSystem relation_system(const Fan& fan, int k) {
  require_codim(fan, k);
  RelationSystem rs;
  const auto& columns = fan.cones_of_codim(k);
  std::vector<std::vector<Integer>> rows;
  for (int tau : fan.cones_of_codim(k + 1)) {
    IntMatrix basis = dual_sublattice_basis(fan, tau);
    std::vector<std::pair<Eigen::Index, IntVector>> normals;
    for (int sigma : fan.cofacets(tau)) normals.emplace_back(fan.position_in_codim(sigma), n_sigma_tau(fan, sigma, tau));
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
      IntVector u = basis.row(r).transpose();
      std::vector<Integer> row(columns.size(), Integer(0));
      for (const auto& [col, n] : normals) row[static_cast<std::size_t>(col)] = u.dot(n);
      rows.push_back(std::move(row));
      rs.tau.push_back(tau);
      rs.u.push_back(std::move(u));
    }
  }
  rs.matrix = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j)
      rs.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return rs;
}

IntMatrix relation_matrix(const Fan& fan, int k) { return relation_system(fan, k).matrix; }

GroupStructure chow_group(const Fan& fan, int k) {
  return cokernel_structure(IntMatrix(relation_matrix(fan, k).transpose()));
}

std::vector<MinkowskiWeight> weight_basis(const Fan& fan, int k) {
  require_complete(fan);
  IntMatrix kernel = kernel_basis(relation_matrix(fan, k));
  std::vector<MinkowskiWeight> out;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) out.push_back({k, kernel.col(j)});
  return out;
}

template <typename Scalar>
WeightCheck is_weight(const Fan& fan, const Weight<Scalar>& w) {
  require_codim(fan, w.codim);
  if (w.values.size() != static_cast<Eigen::Index>(fan.cones_of_codim(w.codim).size())) {
    throw InvalidInput("weight has the wrong number of values");
  }
  RelationSystem rs = relation_system(fan, w.codim);
  WeightCheck check;
  for (Eigen::Index r = 0; r < rs.matrix.rows(); ++r) {
    Scalar sum = 0;
    for (Eigen::Index c = 0; c < rs.matrix.cols(); ++c) {
      if (rs.matrix(r, c) != 0) sum += Scalar(rs.matrix(r, c)) * w.values(c);
    }
    if (sum != 0) {
      check.balanced = false;
      check.violations.push_back({rs.tau[static_cast<std::size_t>(r)], rs.u[static_cast<std::size_t>(r)]});
    }
  }
  return check;
}

template <typename Scalar>
bool balanced_around_codim2(const Fan& fan, const Weight<Scalar>& w) {
  require_complete(fan);
  if (w.codim != 1) throw InvalidInput("cycle-sum test needs a codimension-one weight");
  const int n = fan.rank();
  for (int tau : fan.cones_of_codim(2)) {
    const std::vector<int>& around = fan.cofacets(tau);
    if (around.empty()) continue;
    auto contains_tau = [&](int s) { return std::find(around.begin(), around.end(), s) != around.end(); };
    Vector<Scalar> sum = Vector<Scalar>::Zero(n);
    int start = around.front();
    int sigma = start;
    int rho = fan.cofacets(sigma).front();
    do {
      IntVector m = m_rho_sigma(fan, rho, sigma);
      sum += value_at(fan, w, sigma) * m.cast<Scalar>();
      int next = -1;
      for (int f : fan.facets(rho)) {
        if (f != sigma && contains_tau(f)) next = f;
      }
      if (next < 0) throw std::logic_error("broken star around a codimension-two cone");
      const auto& two = fan.cofacets(next);
      rho = two[0] == rho ? two[1] : two[0];
      sigma = next;
    } while (sigma != start);
    if (!sum.isZero()) return false;
  }
  return true;
}

template <typename Scalar>
Scalar degree_pairing(const Weight<Scalar>& w, const Cycle<Scalar>& z) {
  if (w.codim != z.codim) throw InvalidInput("codimension mismatch in degree pairing");
  if (w.values.size() != z.coefficients.size()) throw InvalidInput("weight and cycle sizes differ");
  return w.values.dot(z.coefficients);
}

MinkowskiWeight divisor_to_weight(const Fan& fan, const CartierData& data) {
  require_complete(fan);
  const auto& maximal = fan.maximal_cones();
  if (data.u.size() != maximal.size()) throw InvalidInput("Cartier data needs one vector per maximal cone");
  auto slot = [&](int rho) {
    return static_cast<std::size_t>(std::find(maximal.begin(), maximal.end(), rho) - maximal.begin());
  };
  MinkowskiWeight w = zero_weight(fan, 1);
  for (int sigma : fan.cones_of_codim(1)) {
    const auto& pair = fan.cofacets(sigma);
    int rho = pair[0], other = pair[1];
    IntVector diff = data.u[slot(rho)] - data.u[slot(other)];
    IntVector m = m_rho_sigma(fan, rho, sigma);
    Eigen::Index pivot = 0;
    while (m(pivot) == 0) ++pivot;
    if (diff(pivot) % m(pivot) != 0) throw InvalidInput("inconsistent Cartier data");
    Integer c = diff(pivot) / m(pivot);
    if (diff != IntVector(c * m)) throw InvalidInput("inconsistent Cartier data");
    w.values(fan.position_in_codim(sigma)) = c;
  }
  return w;
}

CartierData weight_to_cartier(const Fan& fan, const MinkowskiWeight& w) {
  require_complete(fan);
  if (w.codim != 1) throw InvalidInput("Cartier data corresponds to codimension-one weights");
  const auto& maximal = fan.maximal_cones();
  std::vector<std::optional<IntVector>> u(maximal.size());
  auto slot = [&](int rho) {
    return static_cast<std::size_t>(std::find(maximal.begin(), maximal.end(), rho) - maximal.begin());
  };
  u[0] = IntVector::Zero(fan.rank());
  std::deque<int> queue{maximal[0]};
  while (!queue.empty()) {
    int rho = queue.front();
    queue.pop_front();
    for (int sigma : fan.facets(rho)) {
      const auto& pair = fan.cofacets(sigma);
      int other = pair[0] == rho ? pair[1] : pair[0];
      IntVector next = *u[slot(rho)] - value_at(fan, w, sigma) * m_rho_sigma(fan, rho, sigma);
      auto& target = u[slot(other)];
      if (!target) {
        target = next;
        queue.push_back(other);
      } else if (*target != next) {
        throw InvalidInput("path inconsistency: weight is not balanced");
      }
    }
  }
  CartierData out;
  for (auto& x : u) out.u.push_back(*x);
  return out;
}

template WeightCheck is_weight(const Fan&, const Weight<Integer>&);
template WeightCheck is_weight(const Fan&, const Weight<Rational>&);
template bool balanced_around_codim2(const Fan&, const Weight<Integer>&);
template bool balanced_around_codim2(const Fan&, const Weight<Rational>&);
template Integer degree_pairing(const Weight<Integer>&, const Cycle<Integer>&);
template Rational degree_pairing(const Weight<Rational>&, const Cycle<Rational>&);

}  // namespace toric
