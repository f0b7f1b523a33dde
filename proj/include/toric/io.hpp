#ifndef TORIC_IO_HPP
#define TORIC_IO_HPP

// JSON encodings of fans, weights, cycles, polytopes, lattice maps and run
// manifests. Exact numbers are written as strings; readers also accept JSON
// integers.

#include "toric/chow.hpp"
#include "toric/generators.hpp"
#include "toric/polytope.hpp"

#include <json.hpp>

#include <string>

namespace toric {

using Json = nlohmann::ordered_json;

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
/// A list of rows.
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const IntVector& v);
Json to_json(const QVector& v);
/// A list of rows.
Json to_json(const IntMatrix& m);

/// {"rank": n, "rays": [[...]], "max_cones": [[i, j, ...]], "rebase": [[...]]?}
FanData fan_data_from_json(const Json& j);
Json to_json(const FanData& data);
Json describe(const Fan& fan);

/// {"codim": k, "values": {"[i,j]": "3", ...}}; absent cones are 0. The
/// values may also be a list in storage order.
RationalWeight weight_from_json(const Fan& fan, const Json& j);
template <typename Scalar>
Json weight_to_json(const Fan& fan, const Weight<Scalar>& w);

/// {"codim": k, "coefficients": {...}}, read like a weight.
Cycle<Rational> cycle_from_json(const Fan& fan, const Json& j);
template <typename Scalar>
Json cycle_to_json(const Fan& fan, const Cycle<Scalar>& z);

/// {"rank": n, "vertices": [[...]]} or {"rank": n, "facets": [{"normal": [...], "offset": "q"}]}.
Polytope polytope_from_json(const Json& j);
Json to_json(const Polytope& p);

/// 64-bit FNV-1a digest, 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Reads a whole file; throws InvalidInput when it cannot be opened.
std::string read_file(const std::string& path);
/// Parses JSON text; throws InvalidInput on syntax errors.
Json parse_json(const std::string& text);

}  // namespace toric

#endif  // TORIC_IO_HPP
