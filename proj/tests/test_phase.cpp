#include "doctest.h"
#include "test_util.hpp"

#include "leray/errors.hpp"
#include "leray/phase.hpp"

using namespace leray;
using testutil::P;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

const Ring X2({"x1", "x2"});

HyperbolicSymbol wave2() { return HyperbolicSymbol::from_poly(P(HyperbolicSymbol::ring_for(2), "tau^2 - xi1^2 - xi2^2")); }

}  // namespace

TEST_CASE("weight discovery") {
  auto a = discover_weights(P(X2, "x1^2 + x2^3"));
  CHECK(a.w == std::vector<int>{3, 2});
  CHECK(a.total == 6);
  auto b = discover_weights(P(X2, "x1^2 + x1*x2^3"));
  CHECK(b.w == std::vector<int>{3, 1});
  CHECK(b.total == 6);
  CHECK(code_of([] { discover_weights(P(X2, "x1^2 + x2^2")); }) == ErrorCode::HomogeneousOnly);
  CHECK(code_of([] { discover_weights(P(X2, "x1^2 + x2^3 + x1")); }) == ErrorCode::NoPositiveSolution);
  CHECK(code_of([] { discover_weights(P(X2, "x1^2*x2^2")); }) == ErrorCode::AmbiguousWeights);
  CHECK(code_of([] { check_weights(P(X2, "x1^2 + x2^3"), {3, 3}); }) == ErrorCode::NoPositiveSolution);
}

TEST_CASE("condition C.3") {
  CHECK(check_c3(P(X2, "x1^2 + x2^3")) == 2);
  CHECK(check_c3(P(X2, "x1^2 + x2^5")) == 4);
  CHECK(code_of([] { check_c3(P(X2, "x1^2*x2")); }) == ErrorCode::InfiniteDimensional);
}

TEST_CASE("strict hyperbolicity") {
  auto r2 = HyperbolicSymbol::ring_for(2);
  std::vector<Rational> e1{1, 0};
  CHECK(strictly_hyperbolic_at(wave2(), e1));
  CHECK_FALSE(strictly_hyperbolic_at(HyperbolicSymbol::from_poly(P(r2, "tau^2 + xi1^2")), e1));
  CHECK(strictly_hyperbolic_at(HyperbolicSymbol::from_poly(P(r2, "tau^3 - tau*(xi1^2 + xi2^2)")), e1));
  CHECK(check_strict_hyperbolicity(wave2(), 20, 1).passed);
  auto bad = check_strict_hyperbolicity(HyperbolicSymbol::from_poly(P(r2, "tau^2 + xi1^2 + xi2^2")), 20, 1);
  CHECK_FALSE(bad.passed);
  CHECK(bad.witness.size() == 2);
  CHECK_THROWS_AS(HyperbolicSymbol::from_poly(P(r2, "2*tau^2 - xi1^2")), Error);
  CHECK_THROWS_AS(HyperbolicSymbol::from_poly(P(r2, "tau^2 - xi1")), Error);
}

TEST_CASE("phase function") {
  auto F = P(X2, "x1^2 + x2^3");
  Ring r = phase_ring(2);
  auto m1 = HyperbolicSymbol::from_poly(P(HyperbolicSymbol::ring_for(2), "tau"));
  CHECK(build_phase(m1, F) == P(r, "2*x1*z1 + 3*x2*z2^2 - 2*z1^2 - 3*z2^3"));
  auto psi = build_phase(wave2(), F);
  CHECK(psi == P(r, "(2*x1*z1 + 3*x2*z2^2 - 2*z1^2 - 3*z2^3)^2 - t^2*(4*z1^2 + 9*z2^4)"));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    Rational z1 = testutil::uniform(rng, -9, 9), z2 = make_rational(testutil::uniform(rng, -9, 9), 7);
    std::vector<Rational> pt{z1, z2, 0, z1, z2};
    CHECK(psi.evaluate(pt) == 0);
  }
}

TEST_CASE("expansion of the wave/cusp phase") {
  auto F = P(X2, "x1^2 + x2^3");
  auto w = discover_weights(F);
  auto psi = build_phase(wave2(), F);
  auto e = expand_phase(psi, F, w, 2);
  CHECK(e.phase_case == PhaseCase::Case2);
  CHECK(e.terms.size() == 7);
  CHECK(e.mu == 8);
  CHECK(e.bound == 24);
  CHECK(e.base == P(e.z_ring, "(2*z1^2 + 3*z2^3)^2"));
  CHECK(reconstruct_phase(e, psi.ring()) == psi);
  std::map<Monomial, MultiPoly> got;
  for (const auto& d : e.terms) {
    CHECK(monomial_weight(d.alpha, w.w) < 12);
    got.emplace(d.alpha, d.W);
  }
  const Ring& xt = e.xt_ring;
  std::map<Monomial, MultiPoly> want{
      {{3, 0}, P(xt, "-8*x1")},          {{1, 3}, P(xt, "-12*x1")},       {{2, 2}, P(xt, "-12*x2")},
      {{0, 5}, P(xt, "-18*x2")},         {{2, 0}, P(xt, "4*x1^2 - 4*t^2")}, {{1, 2}, P(xt, "12*x1*x2")},
      {{0, 4}, P(xt, "9*x2^2 - 9*t^2")},
  };
  CHECK(got == want);
}

TEST_CASE("expansion for m = 1 and with a constant") {
  auto F = P(X2, "x1^2 + x2^3");
  auto w = discover_weights(F);
  Ring r = phase_ring(2);
  auto psi = build_phase(HyperbolicSymbol::from_poly(P(HyperbolicSymbol::ring_for(2), "tau")), F);
  auto e = expand_phase(psi, F, w, 1);
  CHECK(e.sign == -1);
  CHECK(e.base == P(e.z_ring, "2*z1^2 + 3*z2^3"));
  REQUIRE(e.terms.size() == 2);
  CHECK(e.phase_case == PhaseCase::Case2);
  CHECK(reconstruct_phase(e, r) == psi);

  auto wave = build_phase(wave2(), F) + P(r, "5");
  auto c = expand_phase(wave, F, w, 2);
  CHECK(c.phase_case == PhaseCase::Case1);
  CHECK(total_degree(c.terms.front().alpha) == 0);
  CHECK(c.terms.front().W == P(c.xt_ring, "5"));
  CHECK(c.mu == 8);
}

TEST_CASE("mapping for the wave/cusp phase") {
  auto F = P(X2, "x1^2 + x2^3");
  auto w = discover_weights(F);
  auto e = expand_phase(build_phase(wave2(), F), F, w, 2);
  auto pm = build_mapping(e, 2);
  const auto& m = pm.map;
  CHECK(m.K() == 9);
  CHECK(m.ring.size() == 10);
  CHECK(m.N() == 1);
  CHECK(m.f[0] == P(m.ring, "z1^2 + z2^3"));
  CHECK(pm.rescale == 1);
  CHECK(m.v.back() == 6);
  CHECK(pm.coupled.size() == 7);
  for (std::size_t l = 0; l < m.K(); ++l) CHECK(homogeneous_weight(m.f[l], m.v) == m.p[l]);
  CHECK(pm.phi_staircase.finite);
  MESSAGE("mu(X0) = " << pm.phi_staircase.monomials.size());
}

TEST_CASE("Case 1 leaves the constant uncoupled") {
  auto F = P(X2, "x1^2 + x2^3");
  auto w = discover_weights(F);
  Ring r = phase_ring(2);
  auto e = expand_phase(build_phase(wave2(), F) + P(r, "5"), F, w, 2);
  auto pm = build_mapping(e, 2);
  REQUIRE(pm.constant_term);
  CHECK(pm.coupled.size() == e.mu - 1);
  CHECK(pm.map.K() == e.mu + 1);
}

TEST_CASE("weights are rescaled when P does not divide m w(F)") {
  auto F = P(X2, "x1^2 + x2^3");
  auto w = discover_weights(F);
  auto e = expand_phase(build_phase(wave2(), F), F, w, 2);
  auto pm = build_mapping(e, 5);
  CHECK(pm.rescale == 5);
  for (std::size_t l = 0; l < pm.map.K(); ++l) CHECK(homogeneous_weight(pm.map.f[l], pm.map.v) == pm.map.p[l]);
  CHECK(pm.map.v.back() * 5 == pm.map.p[1]);
}
