#include "toric/product.hpp"

#include <random>
#include <set>

namespace toric {

namespace {

using Index = Eigen::Index;

constexpr int kMaxAttempts = 64;

/// Deterministic sampler: entries uniform in [-bound, bound], the bound
/// doubling after every rejected vector.
class VectorSampler {
 public:
  VectorSampler(std::uint64_t seed, Index n) : rng_(seed), n_(n) {}
  IntVector next() {
    IntVector v(n_);
    const std::uint64_t width = 2 * bound_ + 1;
    for (Index i = 0; i < n_; ++i) v(i) = static_cast<long long>(rng_() % width) - static_cast<long long>(bound_);
    if (bound_ < (std::uint64_t{1} << 40)) bound_ *= 2;
    return v;
  }

 private:
  std::mt19937_64 rng_;
  Index n_;
  std::uint64_t bound_ = 1;
};

bool avoids(const std::vector<IntMatrix>& obstructions, const IntVector& v) {
  for (const auto& f : obstructions) {
    if ((f * v).isZero()) return false;
  }
  return true;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows(), a.cols() + b.cols());
  m << a, b;
  return m;
}

ToricMorphism identity_morphism(const Fan& fan) {
  std::vector<int> image(static_cast<std::size_t>(fan.cone_count()));
  for (int i = 0; i < fan.cone_count(); ++i) image[static_cast<std::size_t>(i)] = i;
  return ToricMorphism{IntMatrix::Identity(fan.rank(), fan.rank()), fan, fan, std::move(image)};
}

}  // namespace

DisplacementRule::DisplacementRule(const Fan& fan, Displacement choice)
    : morphism_(std::make_shared<const ToricMorphism>(identity_morphism(fan))), choice_(std::move(choice)) {
  if (!fan.is_complete()) throw PreconditionError("fan not complete");
}

DisplacementRule::DisplacementRule(const ToricMorphism& f, Displacement choice)
    : morphism_(std::make_shared<const ToricMorphism>(f)), choice_(std::move(choice)) {
  if (!f.source.is_complete() || !f.target.is_complete()) throw PreconditionError("fan not complete");
}

const StarQuotient& DisplacementRule::source_star(int cone) {
  auto it = source_stars_.find(cone);
  if (it == source_stars_.end()) it = source_stars_.emplace(cone, star_quotient(morphism_->source, cone)).first;
  return it->second;
}

const StarQuotient& DisplacementRule::target_star(int cone) {
  auto it = target_stars_.find(cone);
  if (it == target_stars_.end()) it = target_stars_.emplace(cone, star_quotient(morphism_->target, cone)).first;
  return it->second;
}

DisplacementRule::Local DisplacementRule::local(int gamma) {
  Local l;
  l.source = &source_star(gamma);
  l.target = &target_star(morphism_->cone_image.at(static_cast<std::size_t>(gamma)));
  l.psi = l.target->map.projection * morphism_->lattice_map * l.source->map.section;
  return l;
}

std::vector<IntMatrix> DisplacementRule::obstructions(int gamma) {
  Local l = local(gamma);
  const Index nbar = l.target->map.projection.rows();
  std::vector<IntMatrix> out;
  if (nbar == 0) return out;
  std::vector<IntMatrix> images;
  for (const Cone& s : l.source->fan.cones()) images.push_back(l.psi * s.sublattice_basis);
  std::set<std::string> seen;
  for (const IntMatrix& a : images) {
    for (const Cone& t : l.target->fan.cones()) {
      IntMatrix w = hcat(a, t.sublattice_basis);
      if (rank(w) == nbar) continue;
      IntMatrix functionals = IntMatrix(kernel_basis(IntMatrix(w.transpose())).transpose()) * l.target->map.projection;
      std::string key;
      for (Index i = 0; i < functionals.rows(); ++i)
        for (Index j = 0; j < functionals.cols(); ++j) key += to_string(functionals(i, j)) + ",";
      if (seen.insert(key).second) out.push_back(std::move(functionals));
    }
  }
  return out;
}

void DisplacementRule::choose_displacement() {
  const Index n = morphism_->target.rank();
  if (choice_.fixed) {
    if (choice_.fixed->size() != n) throw InvalidInput("displacement vector has the wrong length");
    v_ = *choice_.fixed;
    return;
  }
  std::vector<IntMatrix> all;
  for (int g = 0; g < morphism_->source.cone_count(); ++g) {
    auto more = obstructions(g);
    all.insert(all.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    checked_[g] = true;
  }
  VectorSampler sampler(choice_.seed, n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    IntVector v = sampler.next();
    if (avoids(all, v)) {
      v_ = v;
      return;
    }
  }
  throw GenericityError("no generic displacement vector found");
}

const IntVector& DisplacementRule::displacement() {
  if (!v_) choose_displacement();
  return *v_;
}

const DisplacementCertificate& DisplacementRule::certificate(int gamma) {
  auto cached = certificates_.find(gamma);
  if (cached != certificates_.end()) return cached->second;
  const IntVector& v = displacement();
  if (!checked_[gamma]) {
    if (!avoids(obstructions(gamma), v)) {
      throw GenericityError("displacement vector is not generic over cone " + morphism_->source.cone_label(gamma));
    }
    checked_[gamma] = true;
  }

  Local l = local(gamma);
  const Index nbar = l.target->map.projection.rows();
  DisplacementCertificate cert;
  cert.gamma = gamma;
  cert.v = l.target->map.projection * v;
  const QVector vbar = to_rational(cert.v);
  for (int s = 0; s < l.source->fan.cone_count(); ++s) {
    const Cone& sc = l.source->fan.cone(s);
    IntMatrix a = l.psi * sc.sublattice_basis;
    for (int t = 0; t < l.target->fan.cone_count(); ++t) {
      const Cone& tc = l.target->fan.cone(t);
      if (sc.dim + tc.dim != nbar) continue;
      IntMatrix m = hcat(a, IntMatrix(-tc.sublattice_basis));
      if (determinant(m) == 0) continue;
      QVector sol = *solve(to_rational(m), vbar);
      QVector alpha = sol.head(sc.dim), beta = sol.tail(tc.dim);
      QVector y = to_rational(sc.sublattice_basis) * alpha;
      QVector x = to_rational(tc.sublattice_basis) * beta;
      bool in_s = sc.contains(y), in_t = tc.contains(x);
      if (!in_s || !in_t) continue;
      if (!sc.contains_in_relative_interior(y) || !tc.contains_in_relative_interior(x)) {
        throw std::logic_error("displacement meets a cone on its boundary");
      }
      auto index = lattice_index(hcat(a, tc.sublattice_basis));
      if (!index) throw std::logic_error("infinite multiplicity for a transverse pair");
      cert.pairs.push_back({l.source->to_original[static_cast<std::size_t>(s)],
                            l.target->to_original[static_cast<std::size_t>(t)], QVector(x + vbar), *index});
    }
  }
  return certificates_.emplace(gamma, std::move(cert)).first->second;
}

DisplacementCertificate diagonal_multiplicities(const Fan& fan, int gamma, Displacement choice) {
  DisplacementRule rule(fan, std::move(choice));
  return rule.certificate(gamma);
}

DisplacementCertificate graph_multiplicities(const ToricMorphism& f, int gamma, Displacement choice) {
  DisplacementRule rule(f, std::move(choice));
  return rule.certificate(gamma);
}

namespace {

template <typename Scalar>
void check_size(const Fan& fan, int codim, Index size, const char* what) {
  if (codim < 0 || codim > fan.rank()) throw InvalidInput(std::string(what) + " codimension out of range");
  if (size != static_cast<Index>(fan.cones_of_codim(codim).size())) {
    throw InvalidInput(std::string(what) + " has the wrong number of values");
  }
}

}  // namespace

template <typename Scalar>
Weight<Scalar> cup(DisplacementRule& rule, const Weight<Scalar>& c, const Weight<Scalar>& d) {
  const Fan& fan = rule.morphism().source;
  check_size<Scalar>(fan, c.codim, c.values.size(), "weight");
  check_size<Scalar>(fan, d.codim, d.values.size(), "weight");
  const int k = c.codim + d.codim;
  if (k > fan.rank()) throw InvalidInput("cup product exceeds the dimension");
  Weight<Scalar> out{k, Vector<Scalar>::Zero(static_cast<Index>(fan.cones_of_codim(k).size()))};
  for (int gamma : fan.cones_of_codim(k)) {
    Scalar sum = 0;
    for (const auto& p : rule.certificate(gamma).pairs) {
      if (fan.codim(p.sigma) != c.codim) continue;
      sum += Scalar(p.multiplicity) * value_at(fan, c, p.sigma) * value_at(fan, d, p.tau);
    }
    out.values(fan.position_in_codim(gamma)) = sum;
  }
  return out;
}

template <typename Scalar>
Weight<Scalar> cup(const Fan& fan, const Weight<Scalar>& c, const Weight<Scalar>& d, Displacement choice) {
  DisplacementRule rule(fan, std::move(choice));
  return cup(rule, c, d);
}

template <typename Scalar>
Cycle<Scalar> cap(DisplacementRule& rule, const Weight<Scalar>& c, const Cycle<Scalar>& z) {
  const Fan& fan = rule.morphism().source;
  check_size<Scalar>(fan, c.codim, c.values.size(), "weight");
  check_size<Scalar>(fan, z.codim, z.coefficients.size(), "cycle");
  if (c.codim > z.codim) throw InvalidInput("cap product needs codim(c) <= dimension of the cycle");
  const int k = z.codim - c.codim;
  Cycle<Scalar> out{k, Vector<Scalar>::Zero(static_cast<Index>(fan.cones_of_codim(k).size()))};
  for (int gamma : fan.cones_of_codim(z.codim)) {
    const Scalar& zg = z.coefficients(fan.position_in_codim(gamma));
    if (zg == 0) continue;
    for (const auto& p : rule.certificate(gamma).pairs) {
      if (fan.codim(p.sigma) != c.codim) continue;
      out.coefficients(fan.position_in_codim(p.tau)) += Scalar(p.multiplicity) * value_at(fan, c, p.sigma) * zg;
    }
  }
  return out;
}

template <typename Scalar>
Cycle<Scalar> cap(const Fan& fan, const Weight<Scalar>& c, const Cycle<Scalar>& z, Displacement choice) {
  DisplacementRule rule(fan, std::move(choice));
  return cap(rule, c, z);
}

MinkowskiWeight pullback(DisplacementRule& rule, const MinkowskiWeight& c) {
  const ToricMorphism& f = rule.morphism();
  check_size<Integer>(f.target, c.codim, c.values.size(), "weight");
  const int k = c.codim;
  if (k > f.source.rank()) return MinkowskiWeight{k, IntVector(0)};
  MinkowskiWeight out = zero_weight(f.source, k);
  for (int gamma : f.source.cones_of_codim(k)) {
    Integer sum = 0;
    for (const auto& p : rule.certificate(gamma).pairs) {
      if (f.source.codim(p.sigma) != 0 || f.target.codim(p.tau) != k) continue;
      sum += p.multiplicity * value_at(f.target, c, p.tau);
    }
    out.values(f.source.position_in_codim(gamma)) = sum;
  }
  return out;
}

MinkowskiWeight pullback(const ToricMorphism& f, const MinkowskiWeight& c, Displacement choice) {
  DisplacementRule rule(f, std::move(choice));
  return pullback(rule, c);
}

MinkowskiWeight pullback_dominant(const ToricMorphism& f, const MinkowskiWeight& c) {
  if (!f.is_dominant()) throw PreconditionError("morphism is not dominant");
  check_size<Integer>(f.target, c.codim, c.values.size(), "weight");
  const int k = c.codim;
  if (k > f.source.rank()) return MinkowskiWeight{k, IntVector(0)};
  MinkowskiWeight out = zero_weight(f.source, k);
  for (int gamma : f.source.cones_of_codim(k)) {
    int tau = f.cone_image[static_cast<std::size_t>(gamma)];
    if (f.target.codim(tau) != k) continue;
    auto index = lattice_index(hcat(f.lattice_map, f.target.cone(tau).sublattice_basis));
    out.values(f.source.position_in_codim(gamma)) = value_at(f.target, c, tau) * *index;
  }
  return out;
}

TorusClosure torus_closure_class(const Fan& fan, const IntMatrix& sublattice, Displacement choice) {
  const Index n = fan.rank();
  if (sublattice.rows() != n) throw InvalidInput("sublattice generators have the wrong length");
  if (rank(sublattice) != sublattice.cols()) throw InvalidInput("sublattice generators are not independent");
  TorusClosure out;
  IntMatrix l = sublattice;
  if (!is_saturated(l)) {
    l = saturate(l);
    out.warnings.push_back("sublattice was not saturated; using its saturation");
  }
  const int d = static_cast<int>(l.cols());

  std::optional<GenericityCertificate> cert;
  if (choice.fixed) {
    GenericityCertificate g = is_generic(fan, l, *choice.fixed);
    if (!g.generic) throw GenericityError("displacement vector is not generic for the sublattice");
    out.v = *choice.fixed;
    cert = std::move(g);
  } else {
    VectorSampler sampler(choice.seed, n);
    for (int attempt = 0; attempt < kMaxAttempts && !cert; ++attempt) {
      IntVector v = sampler.next();
      GenericityCertificate g = is_generic(fan, l, v);
      if (g.generic) {
        out.v = v;
        cert = std::move(g);
      }
    }
    if (!cert) throw GenericityError("no generic displacement vector found");
  }

  out.cycle = CycleClass{d, IntVector::Zero(static_cast<Index>(fan.cones_of_codim(d).size()))};
  for (const auto& m : cert->meeting) {
    auto index = lattice_index(hcat(l, fan.cone(m.cone).sublattice_basis));
    if (!index) throw std::logic_error("infinite multiplicity in torus closure");
    out.cycle.coefficients(fan.position_in_codim(m.cone)) = *index;
  }
  out.meeting = cert->meeting;
  return out;
}

template Weight<Integer> cup(DisplacementRule&, const Weight<Integer>&, const Weight<Integer>&);
template Weight<Rational> cup(DisplacementRule&, const Weight<Rational>&, const Weight<Rational>&);
template Weight<Integer> cup(const Fan&, const Weight<Integer>&, const Weight<Integer>&, Displacement);
template Weight<Rational> cup(const Fan&, const Weight<Rational>&, const Weight<Rational>&, Displacement);
template Cycle<Integer> cap(DisplacementRule&, const Weight<Integer>&, const Cycle<Integer>&);
template Cycle<Rational> cap(DisplacementRule&, const Weight<Rational>&, const Cycle<Rational>&);
template Cycle<Integer> cap(const Fan&, const Weight<Integer>&, const Cycle<Integer>&, Displacement);
template Cycle<Rational> cap(const Fan&, const Weight<Rational>&, const Cycle<Rational>&, Displacement);

}  // namespace toric
