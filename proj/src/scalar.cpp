#include "toric/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace toric {

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);  // always positive
  Integer f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

Integer ceil(const Rational& q) {
  Integer f = floor(q);
  return Rational(f) == q ? f : Integer(f + 1);
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    g = gcd(g, v(i));
    if (g == 1) break;
  }
  return g;
}

IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

IntVector primitive(const QVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Integer d = denominator(v(i));
    l = l / gcd(l, d) * d;
  }
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = numerator(v(i) * l);
  return primitive(out);
}

IntVector to_integer(const QVector& v) {
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integral(v(i))) throw InvalidInput("expected an integral vector, got " + to_string(v(i)));
    out(i) = numerator(v(i));
  }
  return out;
}

namespace {
std::string trim(const std::string& s) {
  auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  return b < e ? std::string(b, e) : std::string();
}

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}
}  // namespace

Integer parse_integer(const std::string& text) {
  std::string s = trim(text);
  if (!is_integer_literal(s)) throw InvalidInput("not an integer: '" + text + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

Rational parse_rational(const std::string& text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator: '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (is_integral(v)) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

bool lex_less(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

IntVector make_vector(std::initializer_list<long long> entries) {
  return make_vector(std::vector<long long>(entries));
}

IntVector make_vector(const std::vector<long long>& entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
  return v;
}

IntMatrix columns_to_matrix(const std::vector<IntVector>& columns, Eigen::Index rows) {
  IntMatrix m(rows, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidInput("column length mismatch");
    m.col(static_cast<Eigen::Index>(j)) = columns[j];
  }
  return m;
}

}  // namespace toric
