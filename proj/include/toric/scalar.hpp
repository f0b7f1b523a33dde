#ifndef TORIC_SCALAR_HPP
#define TORIC_SCALAR_HPP

// Exact scalar types and the dense Eigen containers built on them.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;

// Errors. The CLI maps each family onto its own exit code.

/// Malformed or inconsistent input data (exit code 2).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold, e.g. the fan is not complete
/// or not smooth (exit code 3).
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

/// No generic displacement vector could be certified (exit code 4).
struct GenericityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Largest integer <= q.
Integer floor(const Rational& q);
/// Smallest integer >= q.
Integer ceil(const Rational& q);

/// Gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

/// v divided by its content; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);

/// Scales a rational vector by the lcm of its denominators and returns the
/// primitive integer vector in the same direction.
IntVector primitive(const QVector& v);

inline QVector to_rational(const IntVector& v) { return v.cast<Rational>(); }
inline QMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

/// Exact integer vector from a rational one; throws if any entry is fractional.
IntVector to_integer(const QVector& v);

/// Parses "-12", "7/3", " 5 " into a rational.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Lexicographic comparison of equally sized integer vectors.
bool lex_less(const IntVector& a, const IntVector& b);

IntVector make_vector(std::initializer_list<long long> entries);
IntVector make_vector(const std::vector<long long>& entries);

/// Matrix whose columns are the given vectors; `rows` fixes the height when
/// the list is empty.
IntMatrix columns_to_matrix(const std::vector<IntVector>& columns, Eigen::Index rows);

template <typename Scalar>
std::vector<Vector<Scalar>> matrix_columns(const Matrix<Scalar>& m) {
  std::vector<Vector<Scalar>> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.emplace_back(m.col(j));
  return out;
}

}  // namespace toric

#endif  // TORIC_SCALAR_HPP
