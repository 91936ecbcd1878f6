#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "leray/groebner.hpp"
#include "leray/icis.hpp"
#include "leray/phase.hpp"

namespace leray {

// Generators of (<f_l - y_l> + <K x K Jacobian minors>) intersected with Q[y].
std::vector<MultiPoly> critical_locus_eliminant(const IcisMap& map, const GroebnerLimits& limits = {});

struct DiscriminantVerdict {
  bool equal = false;
  bool exact = false;                 // univariate divisibility, no sampling
  std::size_t delta_points = 0;       // sampled on {Delta = 0}
  std::size_t eliminant_points = 0;   // sampled on {eliminant = 0}
  double max_residual = 0;
  std::vector<double> witness;        // a point on one side only
};

// Radicals of Delta and of the eliminant ideal compared exactly when both
// live in one variable, otherwise by mutual vanishing at points found on
// random lines through each hypersurface.
DiscriminantVerdict compare_discriminants(const MultiPoly& delta, const std::vector<MultiPoly>& eliminant,
                                          std::uint64_t seed, double tol = 1e-8, std::size_t points = 40);

struct RaySample {
  std::vector<double> z;
  int sheet = 0;
  double t = 0;
  std::vector<double> x;
  double residual_front = 0;   // |F(z) - s| relative
  double residual_symbol = 0;  // |P(lambda, grad F(z))| relative
};

// All rays of (1.3) through one point z of the initial front. Throws
// VerificationFailed when P(., grad F(z)) has fewer than m real roots or two
// roots closer than collision_tol.
std::vector<RaySample> rays_at(const HyperbolicSymbol& P, const MultiPoly& F, const std::vector<double>& z,
                               const std::vector<double>& t_values, double collision_tol = 1e-8);

struct RaySampleOptions {
  std::vector<double> t_values{0.1, 0.5, 1.0};
  std::size_t count = 40;  // points z on the front; each gives m * |t_values| samples
  std::uint64_t seed = 1;
  double collision_tol = 1e-8;
  double accept_tol = 1e-10;
  double box = 3.0;
};

struct RaySampleSet {
  std::vector<RaySample> samples;
  std::size_t skipped = 0;  // root collisions or residuals above accept_tol
};

namespace kernels {
// The lines are drawn serially from the seed; the parallel kernel processes
// them concurrently and must return the same samples in the same order.
RaySampleSet sample_front_serial(const HyperbolicSymbol& P, const MultiPoly& F, const Rational& s,
                                 const RaySampleOptions& opt);
RaySampleSet sample_front_parallel(const HyperbolicSymbol& P, const MultiPoly& F, const Rational& s,
                                   const RaySampleOptions& opt);
}  // namespace kernels

RaySampleSet sample_front(const HyperbolicSymbol& P, const MultiPoly& F, const Rational& s,
                          const RaySampleOptions& opt = {});

struct FrontEvalReport {
  std::size_t samples = 0;
  double max_residual = 0;
  std::vector<double> witness;  // (x, t) of the worst sample
  bool no_data = false;
  bool passed = false;
};

// phi lives in (x1..xn, t) with s already fixed.
FrontEvalReport eval_front_on_samples(const MultiPoly& phi, const std::vector<RaySample>& samples, double tol);

void write_ray_csv(std::ostream& os, const std::vector<RaySample>& samples, const std::vector<double>& phi_residuals);

}  // namespace leray
