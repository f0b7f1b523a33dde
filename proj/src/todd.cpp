#include "toric/todd.hpp"

#include <functional>

namespace toric {

namespace {

using Index = Eigen::Index;

void require_smooth_complete(const Fan& fan) {
  if (!fan.is_complete()) throw PreconditionError("fan not complete");
  if (!fan.is_smooth()) throw PreconditionError("fan not smooth");
}

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Coefficients of x / (1 - e^{-x}) up to degree 6.
const std::vector<Rational>& todd_series() {
  static const std::vector<Rational> s = {Rational(1),    Rational(1, 2), Rational(1, 12),   Rational(0),
                                          Rational(-1, 720), Rational(0), Rational(1, 30240)};
  return s;
}

std::vector<int> support(const Exponent& e) {
  std::vector<int> s;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

}  // namespace

MinkowskiWeight divisor_weight(const Fan& fan, int i) {
  require_smooth_complete(fan);
  if (i < 0 || i >= static_cast<int>(fan.rays().size())) throw InvalidInput("ray index out of range");
  CartierData data;
  for (int rho : fan.maximal_cones()) {
    const Cone& c = fan.cone(rho);
    IntVector rhs = IntVector::Zero(static_cast<Index>(c.rays.size()));
    for (std::size_t j = 0; j < c.rays.size(); ++j)
      if (c.rays[j] == i) rhs(static_cast<Index>(j)) = 1;
    auto u = solve_integer(IntMatrix(c.generators.transpose()), rhs);
    if (!u) throw std::logic_error("smooth cone without integral dual basis");
    data.u.push_back(*u);
  }
  return divisor_to_weight(fan, data);
}

IntersectionRing::IntersectionRing(const Fan& fan, std::uint64_t seed)
    : fan_(fan), rule_((require_smooth_complete(fan), fan), Displacement::automatic(seed)) {
  for (int i = 0; i < variables(); ++i) divisors_.push_back(divisor_weight(fan_, i));
}

bool IntersectionRing::spans_cone(const Exponent& e) const { return fan_.find(support(e)).has_value(); }

MinkowskiWeight IntersectionRing::product_weight(const Exponent& e) {
  auto it = products_.find(e);
  if (it != products_.end()) return it->second;
  MinkowskiWeight w;
  int last = -1;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) last = static_cast<int>(i);
  if (last < 0) {
    w = constant_weight(fan_, 0, 1);
  } else {
    Exponent rest = e;
    --rest[static_cast<std::size_t>(last)];
    w = cup(rule_, product_weight(rest), divisors_[static_cast<std::size_t>(last)]);
  }
  products_.emplace(e, w);
  return w;
}

Integer IntersectionRing::integral(const Exponent& e) {
  if (static_cast<int>(e.size()) != variables()) throw InvalidInput("exponent has the wrong number of variables");
  if (total_degree(e) != fan_.rank()) throw InvalidInput("integrand must have degree equal to the dimension");
  return product_weight(e).values(0);
}

Integer IntersectionRing::integral_by_relations(const Exponent& e) const {
  if (static_cast<int>(e.size()) != variables()) throw InvalidInput("exponent has the wrong number of variables");
  if (total_degree(e) != fan_.rank()) throw InvalidInput("integrand must have degree equal to the dimension");
  std::vector<int> s = support(e);
  if (!fan_.find(s)) return 0;
  auto repeated = std::find_if(e.begin(), e.end(), [](int x) { return x > 1; });
  if (repeated == e.end()) return 1;  // distinct rays of a smooth maximal cone
  const int i = static_cast<int>(repeated - e.begin());

  int rho = -1;
  for (int m : fan_.maximal_cones()) {
    const auto& r = fan_.cone(m).rays;
    if (std::includes(r.begin(), r.end(), s.begin(), s.end())) { rho = m; break; }
  }
  const Cone& c = fan_.cone(rho);
  IntVector unit = IntVector::Zero(static_cast<Index>(c.rays.size()));
  unit(std::find(c.rays.begin(), c.rays.end(), i) - c.rays.begin()) = 1;
  IntVector u = *solve_integer(IntMatrix(c.generators.transpose()), unit);

  // x_i = -Σ_{j not in rho} <u, v_j> x_j
  Integer total = 0;
  for (int j = 0; j < variables(); ++j) {
    if (std::binary_search(c.rays.begin(), c.rays.end(), j)) continue;
    Integer coeff = u.dot(fan_.rays()[static_cast<std::size_t>(j)]);
    if (coeff == 0) continue;
    Exponent next = e;
    --next[static_cast<std::size_t>(i)];
    ++next[static_cast<std::size_t>(j)];
    total -= coeff * integral_by_relations(next);
  }
  return total;
}

Rational IntersectionRing::integrate(const Polynomial& p) {
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) == fan_.rank()) total += c * Rational(integral(e));
  }
  return total;
}

RationalWeight IntersectionRing::polynomial_weight(const Polynomial& p, int i) {
  if (p.variables() != variables()) throw InvalidInput("polynomial has the wrong number of variables");
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) != i) throw InvalidInput("polynomial is not homogeneous of the requested degree");
  if (i < 0 || i > fan_.rank()) throw InvalidInput("degree out of range");
  RationalWeight w{i, QVector::Zero(static_cast<Index>(fan_.cones_of_codim(i).size()))};
  for (int sigma : fan_.cones_of_codim(i)) {
    Rational value = 0;
    for (const auto& [e, c] : p.terms()) {
      Exponent full = e;
      for (int r : fan_.cone(sigma).rays) ++full[static_cast<std::size_t>(r)];
      value += c * Rational(integral(full));
    }
    w.values(fan_.position_in_codim(sigma)) = value;
  }
  return w;
}

Polynomial IntersectionRing::todd_class() const {
  const int n = fan_.rank();
  if (n > 6) throw PreconditionError("Todd series tabulated up to dimension 6");
  const int d = variables();
  Polynomial td = Polynomial::constant(d, 1);
  for (int i = 0; i < d; ++i) {
    Polynomial factor(d);
    for (int k = 0; k <= n; ++k) {
      Exponent e(static_cast<std::size_t>(d), 0);
      e[static_cast<std::size_t>(i)] = k;
      factor.add_term(e, todd_series()[static_cast<std::size_t>(k)]);
    }
    Polynomial next = Polynomial::multiply_truncated(td, factor, n);
    td = Polynomial(d);
    for (const auto& [e, c] : next.terms())
      if (spans_cone(e)) td.add_term(e, c);
  }
  return td;
}

std::vector<RationalWeight> IntersectionRing::todd_weight() {
  Polynomial td = todd_class();
  std::vector<RationalWeight> out;
  for (int i = 0; i <= fan_.rank(); ++i) out.push_back(polynomial_weight(td.homogeneous_part(i), i));
  return out;
}

Polynomial IntersectionRing::ehrhart_polynomial() {
  if (phi_) return *phi_;
  const int n = fan_.rank(), d = variables();
  Polynomial td = todd_class();
  Polynomial phi(d);
  Exponent alpha(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> visit = [&](int var, int remaining) {
    if (!spans_cone(alpha)) return;
    if (var == d) {
      if (remaining != 0) return;
      const int i = total_degree(alpha);
      Integer denom = 1;
      for (int x : alpha) denom *= factorial(x);
      Rational coeff = 0;
      const Polynomial part = td.homogeneous_part(n - i);
      for (const auto& [beta, t] : part.terms()) {
        Exponent full = alpha;
        for (std::size_t j = 0; j < full.size(); ++j) full[j] += beta[j];
        coeff += t * Rational(integral(full));
      }
      phi.add_term(alpha, coeff / Rational(denom));
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      alpha[static_cast<std::size_t>(var)] = x;
      visit(var + 1, remaining - x);
    }
    alpha[static_cast<std::size_t>(var)] = 0;
  };
  for (int i = 0; i <= n; ++i) visit(0, i);
  phi_ = phi;
  return phi;
}

CoefficientReport coefficient_extraction_check(IntersectionRing& ring) {
  const Fan& fan = ring.fan();
  std::vector<RationalWeight> td = ring.todd_weight();
  Polynomial phi = ring.ehrhart_polynomial();
  CoefficientReport report;
  for (int sigma = 0; sigma < fan.cone_count(); ++sigma) {
    Exponent e(static_cast<std::size_t>(ring.variables()), 0);
    for (int r : fan.cone(sigma).rays) e[static_cast<std::size_t>(r)] = 1;
    int i = fan.codim(sigma);
    CoefficientReport::Entry entry{sigma, value_at(fan, td[static_cast<std::size_t>(i)], sigma), phi.coefficient(e)};
    if (entry.todd != entry.coefficient) report.all_equal = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

ToddCount count_via_todd(IntersectionRing& ring, const IntVector& a) {
  DivisorPolytope p = polytope_from_divisor(ring.fan(), a);
  if (!p.in_k) throw PreconditionError("a is not in K(fan)");
  ToddCount out;
  out.phi = ring.ehrhart_polynomial().evaluate(to_rational(a));
  out.count = count_lattice_points(p.polytope);
  if (out.phi != Rational(out.count)) throw std::logic_error("lattice point polynomial disagrees with enumeration");
  return out;
}

ToddObstruction todd_obstruction(const Fan& fan) {
  if (!fan.is_complete()) throw PreconditionError("fan not complete");
  const Index n = fan.rank();
  ToddObstruction out;
  for (int rho : fan.maximal_cones()) {
    const Cone& c = fan.cone(rho);
    IntMatrix rows(static_cast<Index>(c.rays.size()), n + 1);
    rows << IntMatrix(c.generators.transpose()), IntVector::Ones(static_cast<Index>(c.rays.size()));
    if (rank(rows) == rank(IntMatrix(c.generators.transpose()))) continue;
    out.obstructed = true;
    out.cone = rho;
    IntMatrix chosen(0, n + 1);
    for (std::size_t j = 0; j < c.rays.size() && chosen.rows() < n + 1; ++j) {
      IntMatrix trial(chosen.rows() + 1, n + 1);
      trial << chosen, rows.row(static_cast<Index>(j));
      if (rank(trial) == trial.rows()) {
        chosen = trial;
        out.witness_rays.push_back(c.rays[j]);
      }
    }
    out.determinant = abs(determinant(chosen));
    return out;
  }
  return out;
}

}  // namespace toric
