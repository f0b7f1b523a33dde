#include "toric/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace toric {

namespace {

using Index = Eigen::Index;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  Integer x = integer_from_json(v);
  if (x < 0 || x > 1000000) throw InvalidInput(std::string("field \"") + key + "\" out of range");
  return static_cast<int>(x);
}

// "[0, 2]" -> {0, 2}
std::vector<int> parse_label(const std::string& key) {
  std::string s = key;
  auto b = s.find('['), e = s.rfind(']');
  if (b == std::string::npos || e == std::string::npos || e < b) throw InvalidInput("bad cone label " + key);
  std::string inner = s.substr(b + 1, e - b - 1);
  std::vector<int> out;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      int x = std::stoi(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw InvalidInput("bad cone label " + key);
      out.push_back(x);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad cone label " + key);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Scalar>
Json values_to_json(const Fan& fan, int codim, const Vector<Scalar>& values) {
  Json out = Json::object();
  const auto& cones = fan.cones_of_codim(codim);
  for (std::size_t i = 0; i < cones.size(); ++i) out[fan.cone_label(cones[i])] = to_json(values(static_cast<Index>(i)));
  return out;
}

QVector values_from_json(const Fan& fan, int codim, const Json& j) {
  if (codim < 0 || codim > fan.rank()) throw InvalidInput("codimension out of range");
  const auto& cones = fan.cones_of_codim(codim);
  QVector out = QVector::Zero(static_cast<Index>(cones.size()));
  if (j.is_array()) {
    if (j.size() != cones.size()) throw InvalidInput("wrong number of values");
    for (std::size_t i = 0; i < j.size(); ++i) out(static_cast<Index>(i)) = rational_from_json(j[i]);
    return out;
  }
  if (!j.is_object()) throw InvalidInput("values must be an object or a list");
  for (const auto& [key, value] : j.items()) {
    auto id = fan.find(parse_label(key));
    if (!id || fan.codim(*id) != codim) throw InvalidInput("no cone " + key + " of codimension " + std::to_string(codim));
    out(fan.position_in_codim(*id)) = rational_from_json(value);
  }
  return out;
}

}  // namespace

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvalidInput("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected an exact number, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a list of integers");
  IntVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = integer_from_json(j[i]);
  return v;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("expected a nonempty list of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    IntVector row = int_vector_from_json(j[r]);
    if (static_cast<std::size_t>(row.size()) != cols) throw InvalidInput("rows of different lengths");
    m.row(static_cast<Index>(r)) = row.transpose();
  }
  return m;
}

Json to_json(const Integer& v) { return to_string(v); }
Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(to_json(IntVector(m.row(r).transpose())));
  return out;
}

FanData fan_data_from_json(const Json& j) {
  FanData d;
  d.rank = int_field(j, "rank");
  const Json& rays = field(j, "rays");
  if (!rays.is_array()) throw InvalidInput("rays must be a list");
  for (const auto& r : rays) d.rays.push_back(int_vector_from_json(r));
  const Json& cones = field(j, "max_cones");
  if (!cones.is_array()) throw InvalidInput("max_cones must be a list");
  for (const auto& c : cones) {
    if (!c.is_array()) throw InvalidInput("each maximal cone must be a list of ray indices");
    std::vector<int> ids;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw InvalidInput("ray index must be an integer");
      ids.push_back(x.get<int>());
    }
    d.max_cones.push_back(std::move(ids));
  }
  if (j.contains("rebase") && !j.at("rebase").is_null()) {
    IntMatrix rows = int_matrix_from_json(j.at("rebase"));
    d.rebase = rows.transpose();  // stored as columns
  }
  return d;
}

Json to_json(const FanData& data) {
  Json out = Json::object();
  out["rank"] = data.rank;
  Json rays = Json::array();
  for (const auto& r : data.rays) rays.push_back(to_json(r));
  out["rays"] = rays;
  out["max_cones"] = data.max_cones;
  if (data.rebase) out["rebase"] = to_json(IntMatrix(data.rebase->transpose()));
  return out;
}

Json describe(const Fan& fan) {
  Json out = Json::object();
  out["rank"] = fan.rank();
  out["rays"] = fan.rays().size();
  out["cones"] = fan.cone_count();
  Json counts = Json::array();
  for (int k = 0; k <= fan.rank(); ++k) counts.push_back(fan.cones_of_codim(k).size());
  out["cones_by_codim"] = counts;
  out["maximal_cones"] = fan.maximal_cones().size();
  out["complete"] = fan.is_complete();
  out["simplicial"] = fan.is_simplicial();
  out["smooth"] = fan.is_smooth();
  out["warnings"] = fan.warnings();
  return out;
}

RationalWeight weight_from_json(const Fan& fan, const Json& j) {
  int codim = int_field(j, "codim");
  return {codim, values_from_json(fan, codim, field(j, "values"))};
}

template <typename Scalar>
Json weight_to_json(const Fan& fan, const Weight<Scalar>& w) {
  Json out = Json::object();
  out["codim"] = w.codim;
  out["values"] = values_to_json(fan, w.codim, w.values);
  return out;
}

Cycle<Rational> cycle_from_json(const Fan& fan, const Json& j) {
  int codim = int_field(j, "codim");
  const Json& values = j.contains("coefficients") ? j.at("coefficients") : field(j, "values");
  return {codim, values_from_json(fan, codim, values)};
}

template <typename Scalar>
Json cycle_to_json(const Fan& fan, const Cycle<Scalar>& z) {
  Json out = Json::object();
  out["codim"] = z.codim;
  out["coefficients"] = values_to_json(fan, z.codim, z.coefficients);
  return out;
}

Polytope polytope_from_json(const Json& j) {
  int rank = int_field(j, "rank");
  if (j.contains("vertices")) {
    std::vector<QVector> points;
    for (const auto& p : j.at("vertices")) {
      if (!p.is_array() || static_cast<int>(p.size()) != rank) throw InvalidInput("vertex of the wrong length");
      QVector x(rank);
      for (int i = 0; i < rank; ++i) x(i) = rational_from_json(p[static_cast<std::size_t>(i)]);
      points.push_back(x);
    }
    if (points.empty()) throw InvalidInput("no vertices");
    return Polytope::from_vertices(rank, points);
  }
  if (j.contains("facets")) {
    std::vector<Facet> hs;
    for (const auto& f : j.at("facets")) {
      Facet h{int_vector_from_json(field(f, "normal")), rational_from_json(field(f, "offset"))};
      if (h.normal.size() != rank) throw InvalidInput("facet normal of the wrong length");
      hs.push_back(h);
    }
    return Polytope::from_inequalities(rank, hs);
  }
  throw InvalidInput("polytope needs \"vertices\" or \"facets\"");
}

Json to_json(const Polytope& p) {
  Json out = Json::object();
  out["rank"] = p.ambient_rank();
  out["dimension"] = p.dimension();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  out["vertices"] = vs;
  Json fs = Json::array();
  for (const auto& f : p.facets()) fs.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  out["facets"] = fs;
  Json es = Json::array();
  for (const auto& e : p.equations()) es.push_back({{"normal", to_json(e.normal)}, {"value", to_json(e.value)}});
  out["equations"] = es;
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

template Json weight_to_json(const Fan&, const Weight<Integer>&);
template Json weight_to_json(const Fan&, const Weight<Rational>&);
template Json cycle_to_json(const Fan&, const Cycle<Integer>&);
template Json cycle_to_json(const Fan&, const Cycle<Rational>&);

}  // namespace toric
