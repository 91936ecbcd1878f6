#include "doctest.h"
#include "test_util.hpp"

#include <set>

#include "leray/errors.hpp"
#include "leray/linalg.hpp"

using namespace leray;
using testutil::P;

TEST_CASE("substitution expands a binomial") {
  Ring src({"x"}), dst({"a", "b"});
  auto img = P(dst, "a + b");
  auto out = poly_substitute(P(src, "x^2"), {{"x", img}});
  CHECK(out == P(dst, "a^2 + 2*a*b + b^2"));
}

TEST_CASE("empty substitution is the identity") {
  Ring src({"x"});
  CHECK(poly_substitute(P(src, "x"), {}) == P(src, "x"));
}

TEST_CASE("substituting the wave symbol reproduces the hand expansion of the phase") {
  Ring sym({"tau", "xi1", "xi2"});
  Ring r({"x1", "x2", "t", "z1", "z2"});
  auto F = P(r, "z1^2 + z2^3");
  auto tau = P(r, "x1") * F.derivative(3) + P(r, "x2") * F.derivative(4) - P(r, "z1") * F.derivative(3) -
             P(r, "z2") * F.derivative(4);
  std::map<std::string, MultiPoly> b{{"tau", tau},
                                     {"xi1", P(r, "t") * F.derivative(3)},
                                     {"xi2", P(r, "t") * F.derivative(4)}};
  auto psi = poly_substitute(P(sym, "tau^2 - xi1^2 - xi2^2"), b);
  auto hand = P(r,
                "4*x1^2*z1^2 + 9*x2^2*z2^4 + 4*z1^4 + 9*z2^6 + 12*x1*x2*z1*z2^2 - 8*x1*z1^3"
                " - 12*x1*z1*z2^3 - 12*x2*z1^2*z2^2 - 18*x2*z2^5 + 12*z1^2*z2^3"
                " - 4*t^2*z1^2 - 9*t^2*z2^4");
  CHECK(psi == hand);
  std::set<std::vector<int>> zmon;
  for (const auto& t : psi.terms()) zmon.insert({t.exp[3], t.exp[4]});
  CHECK(zmon.size() == 10);
}

TEST_CASE("unbound variable colliding with a target name is rejected") {
  Ring src({"x", "y"}), dst({"y"});
  CHECK_THROWS_AS(poly_substitute(P(src, "x + y"), {{"x", P(dst, "y")}}), Error);
}

TEST_CASE("weighted graded parts") {
  Ring r({"x1", "x2"});
  std::vector<int> w{3, 2};
  auto cusp = weighted_graded_parts(P(r, "x1^2 + x2^3"), w);
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].weight == 6);
  auto q = weighted_graded_parts(P(r, "x1^2 + x2^2"), w);
  REQUIRE(q.size() == 2);
  CHECK(q[0].weight == 4);
  CHECK(q[0].part == P(r, "x2^2"));
  CHECK(q[1].weight == 6);
  CHECK(weighted_graded_parts(MultiPoly(r), w).empty());
}

TEST_CASE("exact linear solving") {
  {
    auto a = RationalMatrix::identity(2);
    std::vector<Rational> b{1, 2};
    auto s = solve_linear_exact(a, b);
    REQUIRE(s);
    CHECK(s->particular == std::vector<Rational>{1, 2});
    CHECK(s->nullspace.empty());
  }
  {
    RationalMatrix a(1, 2);
    a(0, 0) = 1;
    a(0, 1) = 1;
    std::vector<Rational> b{3};
    auto s = solve_linear_exact(a, b);
    REQUIRE(s);
    CHECK(s->particular == std::vector<Rational>{3, 0});
    REQUIRE(s->nullspace.size() == 1);
    auto& v = s->nullspace[0];
    CHECK(v[0] == -v[1]);
    CHECK(v[0] != 0);
  }
  {
    RationalMatrix a(2, 1);
    a(0, 0) = 1;
    a(1, 0) = 1;
    std::vector<Rational> b{1, 2};
    CHECK_FALSE(solve_linear_exact(a, b));
  }
}

TEST_CASE("random systems: solutions and nullspaces are exact") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    RationalMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        a(i, j) = (rng() % 3 == 0) ? Rational(0) : make_rational(testutil::uniform(rng, -5, 5), testutil::uniform(rng, 1, 3));
    std::vector<Rational> x0(cols);
    for (auto& v : x0) v = testutil::uniform(rng, -4, 4);
    std::vector<Rational> b(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b[i] += a(i, j) * x0[j];
    auto s = solve_linear_exact(a, b);
    REQUIRE(s);
    for (std::size_t i = 0; i < rows; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < cols; ++j) acc += a(i, j) * s->particular[j];
      CHECK(acc == b[i]);
      for (const auto& n : s->nullspace) {
        Rational z = 0;
        for (std::size_t j = 0; j < cols; ++j) z += a(i, j) * n[j];
        CHECK(z == 0);
      }
    }
    CHECK(s->nullspace.size() + rank(a) == cols);
  }
}

TEST_CASE("small determinants, both strategies") {
  Ring r({"y"});
  PolyMatrix d(r, 2, 2);
  d(0, 0) = P(r, "6*y");
  d(1, 1) = P(r, "6*y");
  CHECK(det_poly_matrix(d, DetStrategy::Bareiss) == P(r, "36*y^2"));
  CHECK(det_poly_matrix(d, DetStrategy::Interpolate) == P(r, "36*y^2"));

  Ring s({"a", "b", "c", "d"});
  PolyMatrix m(s, 2, 2);
  m(0, 0) = P(s, "a");
  m(0, 1) = P(s, "b");
  m(1, 0) = P(s, "c");
  m(1, 1) = P(s, "d");
  CHECK(det_poly_matrix(m, DetStrategy::Bareiss) == P(s, "a*d - b*c"));
  CHECK(det_poly_matrix(m, DetStrategy::Interpolate) == P(s, "a*d - b*c"));
}

TEST_CASE("random 4x4 determinant agrees across strategies and kernels") {
  std::mt19937_64 rng(20240611);
  Ring r({"u", "v"});
  auto m = testutil::random_matrix(rng, r, 4, 2, 3);
  auto b = det_bareiss(m);
  CHECK(b == kernels::det_interpolate_serial(m));
  CHECK(b == kernels::det_interpolate_parallel(m));
  CHECK_FALSE(b.is_zero());
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(99);
  Ring r({"u", "v"});
  for (int k = 0; k < 3; ++k) {
    auto m = testutil::random_matrix(rng, r, 3, 1, 2);
    auto n = testutil::random_matrix(rng, r, 3, 1, 2);
    CHECK(det_bareiss(m * n) == det_bareiss(m) * det_bareiss(n));
    CHECK(kernels::det_interpolate_serial(m * n) == det_bareiss(m * n));
  }
}

TEST_CASE("ring axioms and substitution homomorphism on random polynomials") {
  std::mt19937_64 rng(5);
  Ring r({"a", "b", "c"});
  Ring t({"p", "q"});
  for (int k = 0; k < 20; ++k) {
    auto x = testutil::random_poly(rng, r, 3, 4);
    auto y = testutil::random_poly(rng, r, 3, 4);
    auto z = testutil::random_poly(rng, r, 3, 4);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    std::map<std::string, MultiPoly> b{{"a", testutil::random_poly(rng, t, 2, 2)},
                                       {"b", testutil::random_poly(rng, t, 2, 2)},
                                       {"c", testutil::random_poly(rng, t, 2, 2)}};
    CHECK(poly_substitute(x * y, b) == poly_substitute(x, b) * poly_substitute(y, b));
    CHECK(poly_substitute(x + y, b) == poly_substitute(x, b) + poly_substitute(y, b));
  }
}

TEST_CASE("printing re-parses to the same polynomial") {
  std::mt19937_64 rng(11);
  Ring r({"a", "b", "c"});
  for (int k = 0; k < 20; ++k) {
    auto x = testutil::random_poly(rng, r, 3, 5);
    CHECK(parse_poly(to_string(x), r) == x);
  }
}

TEST_CASE("characteristic polynomial and rational roots") {
  RationalMatrix a(2, 2);
  a(0, 0) = make_rational(-1, 6);
  a(1, 1) = make_rational(1, 6);
  auto roots = rational_roots(characteristic_polynomial(a));
  REQUIRE(roots);
  CHECK(*roots == std::vector<Rational>{make_rational(-1, 6), make_rational(1, 6)});
}

TEST_CASE("degree bounds and both interpolation grids") {
  Ring r({"a", "b"});
  PolyMatrix box(r, 2, 2);  // separate high degrees: box grid is smaller
  box(0, 0) = P(r, "a^3 + 1");
  box(0, 1) = P(r, "a");
  box(1, 0) = P(r, "b");
  box(1, 1) = P(r, "b^3 - 2");
  CHECK(det_degree_bounds(box) == std::vector<int>{3, 3});
  CHECK(det_total_degree_bound(box) == 6);
  CHECK(kernels::det_interpolate_serial(box) == det_bareiss(box));

  PolyMatrix simplex(r, 3, 3);  // mixed monomials: simplex grid is smaller
  const char* e[9] = {"a*b + 1", "a^2", "b", "b^2 - a", "3", "a*b^2", "a", "b - a^2", "1 + a + b"};
  for (int i = 0; i < 9; ++i) simplex(i / 3, i % 3) = P(r, e[i]);
  CHECK(det_total_degree_bound(simplex) <= 7);
  CHECK(kernels::det_interpolate_parallel(simplex) == det_bareiss(simplex));

  // Permutation bound beats row sums when heavy entries share a column.
  PolyMatrix skew(r, 2, 2);
  skew(0, 0) = P(r, "a^5");
  skew(1, 0) = P(r, "a^5");
  skew(0, 1) = P(r, "1");
  skew(1, 1) = P(r, "2");
  CHECK(det_degree_bounds(skew)[0] == 5);
  CHECK(det_bareiss(skew) == P(r, "a^5"));
  CHECK(kernels::det_interpolate_serial(skew) == P(r, "a^5"));
}
