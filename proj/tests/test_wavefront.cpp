#include "doctest.h"
#include "test_util.hpp"

#include "leray/errors.hpp"
#include "leray/pipeline.hpp"

using namespace leray;
using testutil::P;

namespace {

ProblemSpec transport(std::optional<Rational> s) {
  ProblemSpec spec;
  spec.operator_text = "tau - xi1";
  spec.front_text = "x1^2 + x2^3";
  spec.power = 2;
  spec.s = s;
  return spec;
}

}  // namespace

TEST_CASE("pullback of a bare discriminant") {
  Ring ring({"s"});
  Ring y = parameter_ring(1);
  MultiPoly delta = P(y, "36*y0^2");
  auto pulled = poly_substitute_into(delta, {{"y0", MultiPoly::variable(ring, 0)}}, ring);
  CHECK(primitive_normalize(pulled) == P(ring, "s^2"));
}

TEST_CASE("first-order transport: both strategies agree and bindings round-trip") {
  Pipeline pl(transport(std::nullopt));
  auto& st = pl.stages();
  MESSAGE("K = " << st.map.K() << ", mu = " << st.phi.mu());
  auto disc = discriminant(st.system, DetStrategy::Bareiss);
  REQUIRE_FALSE(disc.degenerate);
  CHECK(disc.raw == discriminant(st.system, DetStrategy::Interpolate).raw);

  FrontOptions a;
  a.strategy = FrontStrategy::SubstituteAfterDet;
  a.discriminant = &disc.raw;
  auto fa = front_polynomial(st.system, pl.phase_map(), pl.expansion(), a);
  FrontOptions b;
  auto fb = front_polynomial(st.system, pl.phase_map(), pl.expansion(), b);
  CHECK(fa.raw == fb.raw);
  CHECK(fa.phi == fb.phi);
  CHECK(poly_substitute_into(disc.raw, fa.bindings, fa.ring) == fa.raw);
  CHECK(fa.ring.names() == std::vector<std::string>{"x1", "x2", "t", "s"});
  CHECK(fa.bindings.at("y0") == P(fa.ring, "s"));
  CHECK(fa.bindings.at("y1") == P(fa.ring, "0"));
  CHECK(fa.phase_case == PhaseCase::Case2);

  // Normalisation is idempotent; the squarefree part divides phi.
  CHECK(primitive_normalize(fa.phi) == fa.phi);
  CHECK(divide_exact(fa.phi, fa.squarefree).has_value());
  CHECK(fa.phi.leading_term().coef > 0);

  auto rep = t_zero_check(fa, pl.front(), Rational(1), 30, 3);
  CHECK(rep.samples == 30);
  CHECK(rep.passed);
  CHECK(rep.max_residual < 1e-9);
  auto one = specialize_s(fa, Rational(1));
  CHECK(one.ring().names() == std::vector<std::string>{"x1", "x2", "t"});
}

TEST_CASE("t = 0 check failure modes") {
  Pipeline pl(transport(Rational(1)));
  FrontResult fr = pl.front_result();
  CHECK(fr.s == Rational(1));
  fr.phi = MultiPoly::constant(fr.ring, 1);
  auto bad = t_zero_check(fr, pl.front(), Rational(1), 20, 5);
  CHECK_FALSE(bad.passed);
  CHECK(bad.max_residual == doctest::Approx(1.0));

  Ring x({"x1", "x2"});
  FrontResult sphere = pl.front_result();
  auto none = t_zero_check(sphere, P(x, "x1^2 + x2^2"), Rational(-1), 10, 5);
  CHECK(none.no_real_points);
  CHECK_FALSE(none.passed);
}

TEST_CASE("Case 1 bindings carry -sigma W for the constant term") {
  ProblemSpec spec = transport(Rational(2));
  spec.operator_text = "tau^2 - xi1^2 - xi2^2";
  Pipeline pl(spec);
  // Shift the phase by a constant to force Case 1.
  Ring r = phase_ring(2);
  auto e = expand_phase(pl.psi() + P(r, "5"), pl.front(), pl.weights(), 2);
  auto pm = build_mapping(e, 2);
  REQUIRE(pm.constant_term);
  Ring target = front_ring(2, false);
  auto b = front_bindings(pm, e, target, Rational(2));
  CHECK(b.at("y0") == P(target, "2"));
  CHECK(b.at("y1") == P(target, "-5"));
  CHECK(b.size() == pm.map.K());
}
