#include "doctest.h"
#include "test_util.hpp"

#include <random>

#include "leray/errors.hpp"
#include "leray/io.hpp"
#include "leray/pipeline.hpp"

using namespace leray;
using testutil::P;

TEST_CASE("polynomial JSON round-trip") {
  std::mt19937_64 rng(17);
  Ring r({"a", "b", "c"});
  for (int k = 0; k < 20; ++k) {
    auto p = testutil::random_poly(rng, r, 4, 6);
    auto j = poly_to_json(p);
    CHECK(poly_from_json(Json::parse(j.dump())) == p);
  }
  auto j = poly_to_json(P(r, "3/4*a^2 - b"));
  CHECK(j.dump() == R"({"vars":["a","b","c"],"terms":[{"c":"3/4","e":[2,0,0]},{"c":"-1","e":[0,1,0]}]})");
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":["a"],"terms":[{"c":"x","e":[1]}]})")), Error);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"vars":["a"],"terms":[{"c":"1","e":[-1]}]})")), Error);
  Ring other({"q"});
  CHECK_THROWS_AS(poly_from_json(j, &other), Error);
}

TEST_CASE("matrix JSON round-trip") {
  std::mt19937_64 rng(3);
  Ring r({"y0", "y1"});
  auto m = testutil::random_matrix(rng, r, 3, 2, 3);
  CHECK(matrix_from_json(Json::parse(matrix_to_json(m).dump())) == m);
}

TEST_CASE("problem files") {
  auto j = Json::parse(R"({"operator": "tau^2 - xi1^2 - xi2^2", "front": "x1^2 + x2^3",
                           "options": {"powerP": 2, "s": "1", "seed": 9, "det": "bareiss"}})");
  auto spec = problem_from_json(j);
  CHECK(spec.power == 2);
  CHECK(spec.s == Rational(1));
  CHECK(spec.seed == 9);
  CHECK(spec.det == DetStrategy::Bareiss);
  auto again = problem_from_json(problem_to_json(spec));
  CHECK(problem_to_json(again).dump() == problem_to_json(spec).dump());
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"front": "x1"})")), Error);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"operator": "tau", "front": "x1", "options": {"powerP": 1}})")),
                  Error);

  Pipeline pl(spec);
  CHECK(pl.symbol().m == 2);
  CHECK(pl.weights().w == std::vector<int>{3, 2});
  CHECK(pl.c3_dimension() == 2);
  CHECK(pl.hyperbolicity().passed);
}
