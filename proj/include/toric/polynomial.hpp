#ifndef TORIC_POLYNOMIAL_HPP
#define TORIC_POLYNOMIAL_HPP

// Sparse multivariate polynomials with exact rational coefficients.

#include "toric/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace toric {

using Exponent = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(int variables = 0) : variables_(variables) {}
  static Polynomial constant(int variables, const Rational& c);
  static Polynomial variable(int variables, int i);

  int variables() const { return variables_; }
  /// Exponent vectors mapped to nonzero coefficients.
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }

  Polynomial homogeneous_part(int degree) const;
  Polynomial truncated(int max_degree) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Rational s, Polynomial p) { return p *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Product truncated above max_degree.
  static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree);

  Rational evaluate(const QVector& x) const;

  /// Graded lexicographic order, e.g. "a1*a2 - 1/2*a2^2 + 1".
  std::string to_string(const std::string& prefix = "x") const;

 private:
  int variables_;
  std::map<Exponent, Rational> terms_;
};

int total_degree(const Exponent& e);

}  // namespace toric

#endif  // TORIC_POLYNOMIAL_HPP
