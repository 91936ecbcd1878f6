#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "leray/gaussmanin.hpp"
#include "leray/phase.hpp"

namespace leray {

enum class FrontStrategy {
  SubstituteAfterDet,          // pull back the full discriminant
  InterpolateAfterSubstitute,  // substitute into M, then det in (x, t, s)
};

const char* front_strategy_name(FrontStrategy s);

struct FrontResult {
  Ring ring;             // x1..xn, t, and s when symbolic
  MultiPoly phi;         // primitive, positive leading coefficient
  MultiPoly raw;         // pulled-back determinant before normalisation
  MultiPoly squarefree;  // empty ring when not computed
  PhaseCase phase_case = PhaseCase::Case2;
  int power = 0;
  std::optional<Rational> s;  // nullopt: s symbolic
  std::map<std::string, MultiPoly> bindings;  // y_l -> polynomial in ring
  FrontStrategy strategy = FrontStrategy::InterpolateAfterSubstitute;
};

Ring front_ring(std::size_t n, bool symbolic_s);

// y0 -> s, y1 -> -sigma W_1 (Case 1) or 0 (Case 2), y_{j+2} -> sigma W_j for
// the coupled monomials, with sigma the sign that made the base term monic.
std::map<std::string, MultiPoly> front_bindings(const PhaseMap& pm, const PhaseExpansion& e, const Ring& target,
                                                const std::optional<Rational>& s);

struct FrontOptions {
  std::optional<Rational> s;  // symbolic when empty
  FrontStrategy strategy = FrontStrategy::InterpolateAfterSubstitute;
  bool parallel = true;
  bool squarefree = true;
  const MultiPoly* discriminant = nullptr;  // reused by SubstituteAfterDet when given
};

// Pullback of det M along the phase bindings. Throws ZeroAfterSubstitution when the
// pullback vanishes identically.
FrontResult front_polynomial(const GaussManinData& gm, const PhaseMap& pm, const PhaseExpansion& e,
                             const FrontOptions& opt = {});

// phi with s fixed to a rational value (identity when already numeric).
MultiPoly specialize_s(const FrontResult& fr, const Rational& s);

struct TZeroReport {
  std::size_t samples = 0;
  double max_residual = 0;
  std::vector<std::vector<double>> points;
  bool no_real_points = false;
  bool passed = false;
};

// Samples real points of {F = s} on random lines through [-box, box]^n and
// evaluates phi(x, 0, s) by relative residual.
TZeroReport t_zero_check(const FrontResult& fr, const MultiPoly& F, const Rational& s, std::size_t samples,
                         std::uint64_t seed, double tol = 1e-9, double box = 3.0);

}  // namespace leray
