#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leray/icis.hpp"
#include "leray/poly.hpp"

namespace leray {

// P(tau, xi) = tau^m + sum_i P_{m-i}(xi) tau^{m-i}, in the ring (tau, xi1..xin).
struct HyperbolicSymbol {
  MultiPoly P;
  int m = 0;
  std::size_t n = 0;

  // Checks monicity in the first variable and homogeneity of each coefficient.
  static HyperbolicSymbol from_poly(const MultiPoly& p);
  static Ring ring_for(std::size_t n);
};

struct WeightSystem {
  std::vector<int> w;
  int total = 0;  // w(F)
};

WeightSystem discover_weights(const MultiPoly& F);
// Validates user-supplied weights against F (Euler relation, gcd, non-homogeneity).
WeightSystem check_weights(const MultiPoly& F, std::vector<int> w);

// dim Q[x] / <F, dF/dx_1, ..., dF/dx_n>; throws InfiniteDimensional.
std::size_t check_c3(const MultiPoly& F);

struct HyperbolicityReport {
  bool passed = true;
  std::size_t samples = 0;
  std::vector<Rational> witness;  // first failing xi
  int real_roots_at_witness = 0;
};

// Exact distinct-real-root count of P(., xi) compared with m.
bool strictly_hyperbolic_at(const HyperbolicSymbol& s, const std::vector<Rational>& xi, int* distinct = nullptr);
HyperbolicityReport check_strict_hyperbolicity(const HyperbolicSymbol& s, std::size_t sample_count, std::uint64_t seed);

// Ring (x1..xn, t, z1..zn) of the phase function.
Ring phase_ring(std::size_t n);
// F re-expressed in z1..zn of the phase ring (positional).
MultiPoly front_in_z(const MultiPoly& F, const Ring& phase);
// psi = P(<x - z, grad F(z)>, t grad F(z)).
MultiPoly build_phase(const HyperbolicSymbol& s, const MultiPoly& F);

enum class PhaseCase { Case1, Case2 };

struct Deformation {
  Monomial alpha;  // exponent in z
  MultiPoly W;     // coefficient, polynomial in (x, t)
};

struct PhaseExpansion {
  MultiPoly F;        // in z
  MultiPoly base;     // <z, grad F>^m, in z
  int sign = 1;       // psi = sign * base + sum W_i z^alpha_i
  std::vector<Deformation> terms;  // constant monomial first, then by descending weight
  PhaseCase phase_case = PhaseCase::Case2;
  std::size_t mu = 0;
  WeightSystem weights;
  Rational bound;     // m^n prod w(F)/w_i
  Ring xt_ring;       // (x1..xn, t)
  Ring z_ring;        // (z1..zn)
};

PhaseExpansion expand_phase(const MultiPoly& psi, const MultiPoly& F, const WeightSystem& w, int m);
// Re-assembles sign * base + sum W_i z^alpha in the phase ring.
MultiPoly reconstruct_phase(const PhaseExpansion& e, const Ring& phase);

struct PhaseMap {
  IcisMap map;
  // For each coupled monomial index into PhaseExpansion::terms; entry j
  // couples to z_{n+1+j} and to the parameter y_{j+2}.
  std::vector<std::size_t> coupled;
  std::optional<std::size_t> constant_term;  // Case 1: index of alpha = 0
  int rescale = 1;                           // factor applied before the gcd division
  int divisor = 1;
  Staircase phi_staircase;                   // from the isolatedness check
};

PhaseMap build_mapping(const PhaseExpansion& e, int power, const GroebnerLimits& limits = {});

}  // namespace leray
