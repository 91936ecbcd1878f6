#pragma once

#include <vector>

#include "leray/groebner.hpp"
#include "leray/poly.hpp"

namespace leray {

// Quasihomogeneous map (f_0, ..., f_{K-1}) on u = (u_1, ..., u_{N+K}).
struct IcisMap {
  Ring ring;
  std::vector<MultiPoly> f;
  std::vector<int> v;  // variable weights
  std::vector<int> p;  // component weights
  int power = 0;       // P of the phase map, 0 for maps given directly

  std::size_t K() const { return f.size(); }
  std::size_t N() const { return ring.size() - f.size(); }

  // Validates weights and computes p; throws when some f_l is not
  // weighted-homogeneous or the weights are not positive and primitive.
  static IcisMap make(std::vector<MultiPoly> f, std::vector<int> v, int power = 0);
};

// Maximal (K x K) minors of the Jacobian matrix, zero minors omitted.
std::vector<MultiPoly> jacobian_maximal_minors(const IcisMap& map);

// Minors plus components. Its quotient is Phi, the top forms modulo
// df_0^...^df_{K-1}^Omega^N and the f_l multiples.
std::vector<MultiPoly> phi_ideal_generators(const IcisMap& map);

// Groebner staircase of the Phi ideal under grevlex. Throws NotIsolated with
// the ray variable when the quotient is infinite-dimensional.
Staircase isolated_staircase(const IcisMap& map, const GroebnerLimits& limits = {});

}  // namespace leray
