#pragma once

// JSON wire formats.
//
//   matrix:      {"rows": int, "cols": int, "data": [[re, im], ...]}   row-major
//   antilinear:  {"dim_domain": int, "dim_codomain": int, "mat": <matrix>,
//                 "parity": "antilinear"}
//   bipartite:   {"dim_a": int, "dim_b": int, "coeff": <matrix>}
//
// Parse failures throw Error(ParseError); well-formed but non-finite data
// throws Error(NonFinite).

#include <string_view>

#include "json.hpp"

#include "antilin/bipartite.hpp"

namespace antilin::io {

using json = nlohmann::json;

json to_json(const ComplexMatrix& m);
json to_json(const AntilinearMap& t);
json to_json(const BipartiteVector& psi);
json to_json(const ComplexVector& v);

ComplexMatrix matrix_from_json(const json& j);
AntilinearMap antilinear_from_json(const json& j);
BipartiteVector bipartite_from_json(const json& j);

/// json::parse wrapped to throw Error(ParseError).
json parse(std::string_view text);

/// Fetches a required member, ParseError if absent.
const json& member(const json& j, std::string_view key);

}  // namespace antilin::io
