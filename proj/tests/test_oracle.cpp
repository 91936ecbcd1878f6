#include "doctest.h"
#include "test_util.hpp"

#include <sstream>

#include "leray/errors.hpp"
#include "leray/pipeline.hpp"

using namespace leray;
using testutil::P;

namespace {

IcisMap cusp() {
  Ring r({"u1", "u2"});
  return IcisMap::make({P(r, "u1^2 + u2^3")}, {3, 2});
}

IcisMap a1() {
  Ring r({"u1", "u2", "u3"});
  return IcisMap::make({P(r, "u1^2 + u2^2 + u3^2")}, {1, 1, 1});
}

IcisMap quadric_pair() {
  Ring r({"u1", "u2", "u3"});
  return IcisMap::make({P(r, "u1^2 + u2^2 + u3^2"), P(r, "u1^2 + 2*u2^2 + 3*u3^2")}, {1, 1, 1});
}

HyperbolicSymbol wave() {
  return HyperbolicSymbol::from_poly(P(HyperbolicSymbol::ring_for(2), "tau^2 - xi1^2 - xi2^2"));
}

}  // namespace

TEST_CASE("critical locus eliminants of K = 1 maps") {
  Ring y = parameter_ring(1);
  CHECK(critical_locus_eliminant(cusp()) == std::vector<MultiPoly>{P(y, "y0")});
  CHECK(critical_locus_eliminant(a1()) == std::vector<MultiPoly>{P(y, "y0")});
}

TEST_CASE("discriminant comparison") {
  Ring y = parameter_ring(1);
  auto v = compare_discriminants(P(y, "36*y0^2"), {P(y, "y0")}, 1);
  CHECK(v.equal);
  CHECK(v.exact);
  CHECK(compare_discriminants(P(y, "2*y0"), {P(y, "y0")}, 1).equal);
  auto bad = compare_discriminants(P(y, "y0"), {P(y, "y0 - 1")}, 1);
  CHECK_FALSE(bad.equal);
  REQUIRE(bad.witness.size() == 1);
  CHECK(bad.witness[0] == doctest::Approx(0.0));

  auto st = run_map_stages(quadric_pair());
  auto disc = discriminant(st->system);
  auto elim = critical_locus_eliminant(st->map);
  auto q = compare_discriminants(disc.raw, elim, 11);
  CHECK(q.equal);
  CHECK_FALSE(q.exact);
  CHECK(q.delta_points > 0);
  CHECK(q.eliminant_points > 0);
  CHECK(q.max_residual < 1e-8);
  // A perturbed discriminant is caught.
  Ring y2 = parameter_ring(2);
  auto bump = MultiPoly::monomial(y2, {disc.raw.degree(), 0}, Rational(1, 3));
  auto off = compare_discriminants(disc.raw + bump, elim, 11);
  CHECK_FALSE(off.equal);
}

TEST_CASE("rays from a single front point") {
  Ring x({"x1", "x2"});
  auto F = P(x, "x1^2 + x2^3");
  auto rays = rays_at(wave(), F, {1.0, 0.0}, {0.0, 0.5});
  REQUIRE(rays.size() == 4);
  // Sheets are sorted by lambda: -2 then +2.
  CHECK(rays[0].x[0] == doctest::Approx(1.0));
  CHECK(rays[1].x[0] == doctest::Approx(0.5));
  CHECK(rays[1].x[1] == doctest::Approx(0.0));
  CHECK(rays[3].x[0] == doctest::Approx(1.5));
  CHECK(rays[3].x[1] == doctest::Approx(0.0));

  auto tau = HyperbolicSymbol::from_poly(P(HyperbolicSymbol::ring_for(2), "tau"));
  auto flat = rays_at(tau, F, {0.5, 0.25}, {0.0, 1.0, 3.0});
  REQUIRE(flat.size() == 3);
  for (const auto& r : flat) {
    CHECK(r.sheet == 0);
    CHECK(r.x == std::vector<double>{0.5, 0.25});
  }
}

TEST_CASE("ray sampling: kernels agree, samples satisfy their equations") {
  Ring x({"x1", "x2"});
  auto F = P(x, "x1^2 + x2^3");
  RaySampleOptions opt;
  opt.count = 20;
  opt.seed = 5;
  auto a = kernels::sample_front_serial(wave(), F, Rational(1), opt);
  auto b = kernels::sample_front_parallel(wave(), F, Rational(1), opt);
  REQUIRE(a.samples.size() == 20 * 2 * 3);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].x == b.samples[i].x);
    CHECK(a.samples[i].residual_front <= 1e-10);
    CHECK(a.samples[i].residual_symbol <= 1e-10);
  }
  for (const auto& s : a.samples)
    if (s.t == 0.1) {
      double d = 0;
      for (std::size_t i = 0; i < 2; ++i) d += (s.x[i] - s.z[i]) * (s.x[i] - s.z[i]);
      CHECK(std::sqrt(d) == doctest::Approx(0.1));  // unit speed for the wave operator
    }
  std::ostringstream os;
  write_ray_csv(os, a.samples, {});
  CHECK(os.str().rfind("z1,z2,sheet,t,x1,x2,residual_front,residual_symbol\n", 0) == 0);
}

TEST_CASE("front evaluation reports") {
  Ring xt({"x1", "x2", "t"});
  auto empty = eval_front_on_samples(P(xt, "x1"), {}, 1e-6);
  CHECK(empty.no_data);
  CHECK(empty.passed);

  RaySample s;
  s.x = {0.0, 2.0};
  s.t = 1.0;
  CHECK(eval_front_on_samples(P(xt, "x1*t"), {s}, 1e-6).passed);
  auto bad = eval_front_on_samples(P(xt, "x1 + 1"), {s}, 1e-6);
  CHECK_FALSE(bad.passed);
  CHECK(bad.witness == std::vector<double>{0.0, 2.0, 1.0});
}
