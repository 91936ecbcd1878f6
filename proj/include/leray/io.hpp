#pragma once

#include <json.hpp>
#include <string>

#include "leray/polymatrix.hpp"

namespace leray {

using Json = nlohmann::ordered_json;

// {"vars": [...], "terms": [{"c": "num/den", "e": [...]}]}; terms in the
// canonical order, rationals as decimal strings.
Json poly_to_json(const MultiPoly& p);
// Uses the vars of the object; when `ring` is given the vars must match it.
MultiPoly poly_from_json(const Json& j, const Ring* ring = nullptr);

// {"rows": r, "cols": c, "vars": [...], "entries": [poly, ...]} row-major.
Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);  // string "a/b" or integer

Json monomial_list(const std::vector<Monomial>& ms);

// Writes dump(2) plus a newline.
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace leray
