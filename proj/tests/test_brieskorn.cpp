#include "doctest.h"
#include "test_util.hpp"

#include <numeric>

#include "leray/brieskorn.hpp"
#include "leray/errors.hpp"

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

IcisMap a4() {
  Ring r({"u1", "u2"});
  return IcisMap::make({P(r, "u1^2 + u2^5")}, {5, 2});
}

IcisMap quadric_pair() {
  Ring r({"u1", "u2", "u3"});
  return IcisMap::make({P(r, "u1^2 + u2^2 + u3^2"), P(r, "u1^2 + 2*u2^2 + 3*u3^2")}, {1, 1, 1});
}

}  // namespace

TEST_CASE("Phi bases of classical maps") {
  auto c = phi_basis(cusp());
  CHECK(c.monomials == std::vector<Monomial>{{0, 0}, {0, 1}});
  CHECK(c.weights == std::vector<int>{5, 7});
  CHECK(phi_basis(a1()).mu() == 1);
  CHECK(phi_basis(a4()).mu() == 4);
}

TEST_CASE("F bases of classical maps") {
  auto map = cusp();
  auto fb = f_basis(map, 2);
  CHECK(fb.weights == std::vector<int>{5, 7});
  Ring r = map.ring;
  CHECK(fb.representatives[0] == DiffForm::basis(P(r, "1"), 3));
  CHECK(fb.representatives[1] == DiffForm::basis(P(r, "u2"), 3));
  auto a = f_basis(a1(), 1);
  CHECK(a.weights == std::vector<int>{3});
  CHECK(a.representatives[0] == DiffForm::basis(P(a1().ring, "1"), 7));
  CHECK_THROWS_AS(f_basis(cusp(), 3, 20), Error);
}

TEST_CASE("exact F representatives satisfy d omega = l omega~") {
  for (const auto& map : {cusp(), a4(), quadric_pair()}) {
    auto phi = phi_basis(map);
    auto fb = f_basis(map, phi.mu());
    EulerField e(map.v);
    for (std::size_t i = 0; i < fb.forms.size(); ++i) {
      auto omega = contract_euler(fb.forms[i], e);
      CHECK(exterior_d(omega) == fb.forms[i].scaled(Rational(fb.weights[i])));
      CHECK(fb.forms[i].weight(e) == fb.weights[i]);
    }
  }
}

TEST_CASE("dim Phi equals dim F") {
  for (const auto& map : {cusp(), a1(), a4(), quadric_pair()}) {
    auto phi = phi_basis(map);
    auto dims = f_space_dimensions(map, 4 * std::accumulate(map.p.begin(), map.p.end(), 0));
    std::size_t total = 0;
    for (auto [w, k] : dims) total += k;
    CHECK(total == phi.mu());
  }
}

TEST_CASE("lattice reduction: cusp") {
  auto map = cusp();
  auto phi = phi_basis(map);
  LatticeReducer red(map, phi);
  Ring r = map.ring;
  const Ring& y = red.y_ring();
  auto c1 = red.reduce(DiffForm::basis(P(r, "1"), 3));
  CHECK(c1.row == std::vector<MultiPoly>{P(y, "1"), P(y, "0")});
  CHECK(c1.eta.is_zero());
  auto c2 = red.reduce(DiffForm::basis(P(r, "u2"), 3));
  CHECK(c2.row == std::vector<MultiPoly>{P(y, "0"), P(y, "1")});
  auto z = red.reduce(DiffForm(r, 2));
  CHECK(z.row == std::vector<MultiPoly>{P(y, "0"), P(y, "0")});
  auto t = red.reduce(DiffForm::basis(P(r, "u1^2 + u2^3"), 3));
  CHECK(t.row == std::vector<MultiPoly>{P(y, "y0"), P(y, "0")});
  for (const auto& c : {c1, c2, z, t}) CHECK(red.verify(c));
}

TEST_CASE("Gauss-Manin matrices for K = 1") {
  {
    auto map = cusp();
    auto phi = phi_basis(map);
    auto fb = f_basis(map, phi.mu());
    LatticeReducer red(map, phi);
    auto gm = gm_matrices(map, phi, fb, red);
    CHECK(gm.P[0] == PolyMatrix::identity(red.y_ring(), 2));
    CHECK(gm.L == std::vector<int>{5, 7});
  }
  {
    auto map = a1();
    auto phi = phi_basis(map);
    auto fb = f_basis(map, phi.mu());
    LatticeReducer red(map, phi);
    auto gm = gm_matrices(map, phi, fb, red);
    CHECK(gm.P[0] == PolyMatrix::identity(red.y_ring(), 1));
    CHECK(gm.L == std::vector<int>{3});
  }
}

TEST_CASE("certificates and forced weights on every suite map") {
  for (const auto& map : {cusp(), a1(), a4(), quadric_pair()}) {
    auto phi = phi_basis(map);
    auto fb = f_basis(map, phi.mu());
    LatticeReducer red(map, phi);
    auto gm = gm_matrices(map, phi, fb, red);
    for (const auto& c : gm.certificates) CHECK(red.verify(c));
    for (std::size_t l = 0; l < map.K(); ++l)
      for (std::size_t i = 0; i < phi.mu(); ++i)
        for (std::size_t j = 0; j < phi.mu(); ++j) {
          const auto& e = gm.P[l](i, j);
          if (e.is_zero()) continue;
          CHECK(homogeneous_weight(e, map.p) == forced_entry_weight(map, phi, fb, l, i, j));
        }
  }
}

TEST_CASE("P(0) at y = 0 is invertible for A_k") {
  for (int k = 1; k <= 4; ++k) {
    Ring r({"u1", "u2"});
    int w2 = 2, w1 = k + 1;
    if ((k + 1) % 2 == 0) {
      w1 = (k + 1) / 2;
      w2 = 1;
    }
    auto gw = std::gcd(w1, w2);
    auto map = IcisMap::make({P(r, ("u1^2 + u2^" + std::to_string(k + 1)).c_str())}, {w1 / gw, w2 / gw});
    auto phi = phi_basis(map);
    CHECK(phi.mu() == static_cast<std::size_t>(k));
    auto fb = f_basis(map, phi.mu());
    LatticeReducer red(map, phi);
    auto gm = gm_matrices(map, phi, fb, red);
    std::vector<Rational> zero(1);
    CHECK(determinant(gm.P[0].evaluate(zero)) != 0);
  }
}
