#include "doctest.h"
#include "test_util.hpp"

#include "leray/errors.hpp"
#include "leray/groebner.hpp"

using namespace leray;
using testutil::P;

TEST_CASE("groebner: already a basis") {
  Ring r({"x", "y"});
  auto gb = groebner({P(r, "x^2"), P(r, "y")}, MonomialOrder::lex());
  REQUIRE(gb.generators().size() == 2);
  CHECK(gb.generators()[0] == P(r, "y"));
  CHECK(gb.generators()[1] == P(r, "x^2"));
}

TEST_CASE("groebner: cusp Jacobian ideal") {
  Ring r({"x1", "x2"});
  auto gb = groebner({P(r, "2*x1"), P(r, "3*x2^2"), P(r, "x1^2 + x2^3")}, MonomialOrder::grevlex());
  std::vector<Monomial> leads = gb.leading_monomials();
  std::sort(leads.begin(), leads.end());
  CHECK(leads == std::vector<Monomial>{{0, 2}, {1, 0}});
  auto st = standard_monomials(gb);
  REQUIRE(st.finite);
  CHECK(st.monomials == std::vector<Monomial>{{0, 0}, {0, 1}});
  CHECK(normal_form(P(r, "x2^3"), gb).is_zero());
}

TEST_CASE("groebner: unit ideal") {
  Ring r({"x"});
  auto gb = groebner({P(r, "x - 1"), P(r, "x")}, MonomialOrder::grevlex());
  CHECK(gb.is_unit());
  CHECK(gb.generators().front() == P(r, "1"));
  auto st = standard_monomials(gb);
  CHECK(st.finite);
  CHECK(st.monomials.empty());
}

TEST_CASE("standard monomials: infinite staircase") {
  Ring r({"x", "y"});
  auto st = standard_monomials(groebner({P(r, "x^2")}, MonomialOrder::grevlex()));
  CHECK_FALSE(st.finite);
  REQUIRE(st.ray);
  CHECK(*st.ray == 1);
}

TEST_CASE("normal form: membership and idempotence") {
  std::mt19937_64 rng(17);
  Ring r({"x", "y", "z"});
  std::vector<MultiPoly> gens{P(r, "x^2 + y*z - 1"), P(r, "y^2 - x*z"), P(r, "z^3 + x")};
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(1)}) {
    auto gb = groebner(gens, order);
    for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
    for (int k = 0; k < 10; ++k) {
      auto p = testutil::random_poly(rng, r, 4, 5);
      auto nf = normal_form(p, gb);
      CHECK(normal_form(nf, gb) == nf);
      CHECK(normal_form(p - nf, gb).is_zero());
      auto member = p * gens[0] + nf * gens[2];
      CHECK(normal_form(member, gb).is_zero());
    }
  }
}

TEST_CASE("quotient dimension does not depend on the order") {
  Ring r({"x", "y"});
  std::vector<std::vector<MultiPoly>> ideals{
      {P(r, "2*x"), P(r, "3*y^2")},
      {P(r, "2*x"), P(r, "5*y^4"), P(r, "x^2 + y^5")},
      {P(r, "x^2 + y^3 - x*y"), P(r, "y^2 - x^3")},
      {P(r, "x^3 - y"), P(r, "y^2 - 2*x")},
  };
  for (const auto& gens : ideals) {
    auto a = standard_monomials(groebner(gens, MonomialOrder::lex()));
    auto b = standard_monomials(groebner(gens, MonomialOrder::grevlex()));
    REQUIRE(a.finite);
    REQUIRE(b.finite);
    CHECK(a.monomials.size() == b.monomials.size());
  }
}

TEST_CASE("elimination examples") {
  Ring r({"u", "y"});
  auto e = eliminate({P(r, "u^2 - y"), P(r, "2*u")}, {"u"});
  REQUIRE(e.size() == 1);
  CHECK(e[0] == P(Ring({"y"}), "y"));
  CHECK(eliminate({P(r, "u - y")}, {"u"}).empty());

  Ring s({"u1", "u2", "y"});
  auto c = eliminate({P(s, "u1^2 + u2^3 - y"), P(s, "2*u1"), P(s, "3*u2^2")}, {"u1", "u2"});
  REQUIRE(c.size() == 1);
  CHECK(c[0] == P(Ring({"y"}), "y"));
}

TEST_CASE("resource caps are reported") {
  Ring r({"x", "y", "z"});
  GroebnerLimits tight;
  tight.max_pairs = 1;
  try {
    groebner({P(r, "x^2 + y*z - 1"), P(r, "y^2 - x*z"), P(r, "z^3 + x")}, MonomialOrder::lex(), tight);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResourceLimit);
  }
}
