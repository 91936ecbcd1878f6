#include "leray/io.hpp"

#include <fstream>
#include <sstream>

#include "leray/errors.hpp"

namespace leray {

Json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
      Rational q(j.get<std::string>());
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorCode::SyntaxError, "expected a rational, got " + j.dump());
}

Json poly_to_json(const MultiPoly& p) {
  Json j;
  j["vars"] = p.ring().names();
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back({{"c", rational_to_json(t.coef)}, {"e", t.exp}});
  j["terms"] = std::move(terms);
  return j;
}

MultiPoly poly_from_json(const Json& j, const Ring* ring) {
  try {
    Ring r(j.at("vars").get<std::vector<std::string>>());
    if (ring) {
      if (*ring != r) throw Error(ErrorCode::UnknownVariable, "polynomial variables do not match the expected ring");
      r = *ring;
    }
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      Monomial e = t.at("e").get<Monomial>();
      if (e.size() != r.size()) throw Error(ErrorCode::SyntaxError, "exponent length differs from variable count");
      for (int x : e)
        if (x < 0) throw Error(ErrorCode::NegativeExponent, "negative exponent in polynomial object");
      terms.push_back({std::move(e), rational_from_json(t.at("c"))});
    }
    return MultiPoly::from_terms(r, std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed polynomial object: ") + ex.what());
  }
}

Json matrix_to_json(const PolyMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["vars"] = m.ring().names();
  Json e = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e.push_back(poly_to_json(m(r, c)));
  j["entries"] = std::move(e);
  return j;
}

PolyMatrix matrix_from_json(const Json& j) {
  try {
    Ring r(j.at("vars").get<std::vector<std::string>>());
    const auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
    const auto& e = j.at("entries");
    if (e.size() != rows * cols) throw Error(ErrorCode::SyntaxError, "matrix entry count differs from rows * cols");
    PolyMatrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m(i / cols, i % cols) = poly_from_json(e[i], &r);
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed matrix object: ") + ex.what());
  }
}

Json monomial_list(const std::vector<Monomial>& ms) {
  Json j = Json::array();
  for (const auto& m : ms) j.push_back(m);
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::Io, "cannot write " + path);
  os << j.dump(2) << "\n";
  if (!os) throw Error(ErrorCode::Io, "write failed for " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::Io, "cannot read " + path);
  try {
    return Json::parse(is);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(ErrorCode::SyntaxError, path + ": " + ex.what());
  }
}

}  // namespace leray
