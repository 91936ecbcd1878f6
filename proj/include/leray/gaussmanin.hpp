#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leray/brieskorn.hpp"
#include "leray/polymatrix.hpp"

namespace leray {

// d[M(y) I] = L_V [sum_l (-1)^l P^(l)(y) dy_l] I with M = sum_l (-1)^l p_l y_l P^(l).
struct GaussManinData {
  std::size_t K = 0, mu = 0;
  std::vector<PolyMatrix> P;
  std::vector<int> L;           // diagonal of L_V
  std::vector<int> p;           // component weights, also w(y_l)
  std::vector<int> phi_weights; // w(phi_q du)
  PolyMatrix M;
  // Right-hand sides (-1)^l L_V P^(l).
  std::vector<PolyMatrix> rhs;
};

GaussManinData assemble_system(std::vector<PolyMatrix> P, std::vector<int> L, std::vector<int> p,
                               std::vector<int> phi_weights);
GaussManinData assemble_system(const IcisMap& map, const PhiBasis& phi, const GMMatrices& gm);

struct Discriminant {
  MultiPoly raw;         // det M
  MultiPoly normalized;  // primitive, positive grevlex leading coefficient
  MultiPoly squarefree;
  int weight = 0;        // sum l_j - sum w(psi_q)
  bool degenerate = false;
};

// Expected weight of det M under w(y_l) = p_l.
int discriminant_weight(const GaussManinData& d);

// An identically zero determinant is returned flagged, not thrown; callers
// that need a defining equation use require_nondegenerate.
Discriminant discriminant(const GaussManinData& d, DetStrategy strategy = DetStrategy::Bareiss);

void require_nondegenerate(const Discriminant& disc);

struct ResidueExponents {
  std::vector<Rational> exponents;  // ascending, with multiplicity
  std::vector<Rational> charpoly;   // ascending coefficients
};

// Eigenvalues of (L_V P^(0)(0) - p_0 I)(p_0 P^(0)(0))^{-1}. Throws
// Degenerate when K != 1, P^(0)(0) is singular, or an eigenvalue is irrational.
ResidueExponents residue_exponents_K1(const GaussManinData& d);

struct FlatnessReport {
  bool vacuous = false;  // K = 1
  std::size_t points = 0;
  std::size_t skipped = 0;  // samples landing on det M = 0
  std::vector<std::vector<Rational>> sample_points;
};

// Exact curvature of dJ = sum_l A_l J dy_l, A_l = (-1)^l L_V P^(l) M^{-1},
// at random rational points. Throws CurvatureNonzero with the failing point.
FlatnessReport flatness_check(const GaussManinData& d, std::size_t points, std::uint64_t seed);

// Curvature matrices C_kl at one point; all zero for a flat system.
std::vector<RationalMatrix> curvature_at(const GaussManinData& d, const std::vector<Rational>& y);

}  // namespace leray
