#include "toric/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace toric {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial Polynomial::constant(int variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Exponent(static_cast<std::size_t>(variables), 0), c);
  return p;
}

Polynomial Polynomial::variable(int variables, int i) {
  Polynomial p(variables);
  Exponent e(static_cast<std::size_t>(variables), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  p.add_term(e, 1);
  return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != variables_) throw InvalidInput("exponent has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial p(variables_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == degree) p.terms_.emplace(e, c);
  return p;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial p(variables_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= max_degree) p.terms_.emplace(e, c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.variables_ != variables_) throw InvalidInput("polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
  if (a.variables_ != b.variables_) throw InvalidInput("polynomials in different rings");
  Polynomial p(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > max_degree) continue;
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return Polynomial::multiply_truncated(a, b, std::numeric_limits<int>::max());
}

Rational Polynomial::evaluate(const QVector& x) const {
  if (x.size() != variables_) throw InvalidInput("wrong number of values for evaluation");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= x(static_cast<Eigen::Index>(i));
    total += t;
  }
  return total;
}

std::string Polynomial::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int dx = total_degree(x.first), dy = total_degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = prefix + std::to_string(i + 1);
      if (e[i] > 1) f += "^" + std::to_string(e[i]);
      factors.push_back(f);
    }
    if (factors.empty() || mag != 1) {
      os << toric::to_string(mag);
      if (!factors.empty()) os << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace toric
