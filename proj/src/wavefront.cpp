#include "leray/wavefront.hpp"

#include <cmath>
#include <random>

#include "leray/errors.hpp"
#include "leray/gcd.hpp"
#include "leray/numeric.hpp"

namespace leray {

const char* front_strategy_name(FrontStrategy s) {
  return s == FrontStrategy::SubstituteAfterDet ? "substitute-after-det" : "interpolate-after-substitute";
}

Ring front_ring(std::size_t n, bool symbolic_s) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("t");
  if (symbolic_s) names.push_back("s");
  return Ring(names);
}

std::map<std::string, MultiPoly> front_bindings(const PhaseMap& pm, const PhaseExpansion& e, const Ring& target,
                                                const std::optional<Rational>& s) {
  auto lift = [&](const MultiPoly& w) {  // (x, t) is a prefix of the target
    std::vector<Term> ts;
    for (const auto& t : w.terms()) {
      Monomial ex(target.size(), 0);
      std::copy(t.exp.begin(), t.exp.end(), ex.begin());
      ts.push_back({std::move(ex), t.coef});
    }
    return MultiPoly::from_terms(target, std::move(ts));
  };
  const Rational sigma = e.sign;
  std::map<std::string, MultiPoly> b;
  b["y0"] = s ? MultiPoly::constant(target, *s) : MultiPoly::variable(target, "s");
  b["y1"] = pm.constant_term ? lift(e.terms[*pm.constant_term].W) * (-sigma) : MultiPoly(target);
  for (std::size_t j = 0; j < pm.coupled.size(); ++j)
    b["y" + std::to_string(j + 2)] = lift(e.terms[pm.coupled[j]].W) * sigma;
  return b;
}

FrontResult front_polynomial(const GaussManinData& gm, const PhaseMap& pm, const PhaseExpansion& e,
                             const FrontOptions& opt) {
  FrontResult fr;
  fr.ring = front_ring(e.xt_ring.size() - 1, !opt.s);
  fr.s = opt.s;
  fr.power = pm.map.power;
  fr.phase_case = e.phase_case;
  fr.strategy = opt.strategy;
  fr.bindings = front_bindings(pm, e, fr.ring, opt.s);
  if (fr.bindings.size() != gm.K) throw Error(ErrorCode::Internal, "front bindings do not cover y0..y{K-1}");

  if (opt.strategy == FrontStrategy::SubstituteAfterDet) {
    MultiPoly delta = opt.discriminant ? *opt.discriminant : det_bareiss(gm.M);
    fr.raw = poly_substitute_into(delta, fr.bindings, fr.ring);
  } else {
    PolyMatrix ms = gm.M.substitute(fr.bindings, fr.ring);
    fr.raw = opt.parallel ? kernels::det_interpolate_parallel(ms) : kernels::det_interpolate_serial(ms);
  }
  if (fr.raw.is_zero())
    throw Error(ErrorCode::ZeroAfterSubstitution, "det M vanishes identically after y -> (s, case rule, W(x,t))");
  fr.phi = primitive_normalize(fr.raw);
  if (opt.squarefree) fr.squarefree = squarefree_part(fr.phi);
  return fr;
}

MultiPoly specialize_s(const FrontResult& fr, const Rational& s) {
  if (fr.s) return fr.phi;
  Ring target = front_ring(fr.ring.size() - 2, false);
  std::map<std::string, MultiPoly> b{{"s", MultiPoly::constant(target, s)}};
  return poly_substitute_into(fr.phi, b, target);
}

TZeroReport t_zero_check(const FrontResult& fr, const MultiPoly& F, const Rational& s, std::size_t samples,
                         std::uint64_t seed, double tol, double box) {
  TZeroReport rep;
  const std::size_t n = F.ring().size();
  MultiPoly phi = specialize_s(fr, s);
  std::mt19937_64 rng(seed);
  MultiPoly Fs = F - MultiPoly::constant(F.ring(), s);
  const std::size_t max_lines = 200 * samples + 200;
  for (std::size_t line = 0; line < max_lines && rep.samples < samples; ++line) {
    std::vector<Rational> c(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = random_rational(rng, static_cast<int>(box));
      d[i] = random_rational(rng, 1);
    }
    for (double lam : real_roots(to_double(restrict_to_line(Fs, c, d)))) {
      std::vector<double> x(n);
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = c[i].get_d() + lam * d[i].get_d();
        inside = inside && std::abs(x[i]) <= box;
      }
      if (!inside) continue;
      std::vector<double> pt(x);
      pt.push_back(0.0);  // t
      rep.max_residual = std::max(rep.max_residual, relative_residual(phi, pt));
      rep.points.push_back(std::move(x));
      if (++rep.samples == samples) break;
    }
  }
  rep.no_real_points = rep.samples == 0;
  rep.passed = !rep.no_real_points && rep.max_residual < tol;
  return rep;
}

}  // namespace leray
