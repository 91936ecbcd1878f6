#include "leray/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>

#include "leray/errors.hpp"
#include "leray/gcd.hpp"
#include "leray/numeric.hpp"

namespace leray {

std::vector<MultiPoly> critical_locus_eliminant(const IcisMap& map, const GroebnerLimits& limits) {
  std::vector<std::string> names = map.ring.names();
  std::vector<std::string> drop = names;
  for (std::size_t l = 0; l < map.K(); ++l) names.push_back("y" + std::to_string(l));
  Ring big(names);
  auto lift = [&](const MultiPoly& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial e(big.size(), 0);
      std::copy(t.exp.begin(), t.exp.end(), e.begin());
      ts.push_back({std::move(e), t.coef});
    }
    return MultiPoly::from_terms(big, std::move(ts));
  };
  std::vector<MultiPoly> gens;
  for (std::size_t l = 0; l < map.K(); ++l)
    gens.push_back(lift(map.f[l]) - MultiPoly::variable(big, map.ring.size() + l));
  for (const auto& m : jacobian_maximal_minors(map)) gens.push_back(lift(m));
  return eliminate(gens, drop, limits);
}

namespace {

std::optional<std::size_t> single_variable(const std::vector<MultiPoly>& ps) {
  std::optional<std::size_t> var;
  for (const auto& p : ps)
    for (std::size_t v = 0; v < p.ring().size(); ++v)
      if (p.uses_variable(v)) {
        if (var && *var != v) return std::nullopt;
        var = v;
      }
  return var;
}

double max_residual(const std::vector<MultiPoly>& ps, const std::vector<double>& x) {
  double r = 0;
  for (const auto& p : ps) r = std::max(r, relative_residual(p, x));
  return r;
}

// Real points of {p = 0} on random lines through a box around the origin.
std::vector<std::vector<double>> points_on(const MultiPoly& p, std::mt19937_64& rng, std::size_t count) {
  const std::size_t n = p.ring().size();
  std::vector<std::vector<double>> out;
  for (std::size_t tries = 0; tries < 50 * count + 50 && out.size() < count; ++tries) {
    std::vector<Rational> c(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = random_rational(rng, 2);
      d[i] = random_rational(rng, 1);
    }
    auto line = restrict_to_line(p, c, d);
    if (line.size() < 2) continue;
    for (double lam : real_roots(to_double(line))) {
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = c[i].get_d() + lam * d[i].get_d();
      out.push_back(std::move(x));
      if (out.size() == count) break;
    }
  }
  return out;
}

}  // namespace

DiscriminantVerdict compare_discriminants(const MultiPoly& delta, const std::vector<MultiPoly>& eliminant,
                                          std::uint64_t seed, double tol, std::size_t points) {
  DiscriminantVerdict v;
  if (delta.is_zero()) throw Error(ErrorCode::Degenerate, "cannot compare a zero discriminant");
  std::vector<MultiPoly> elim;
  for (const auto& e : eliminant)
    if (!e.is_zero()) elim.push_back(e.in_ring(delta.ring()));
  MultiPoly sd = squarefree_part(delta);
  MultiPoly ge(delta.ring());
  for (const auto& e : elim) ge = poly_gcd(ge, e);
  MultiPoly se = ge.is_zero() ? ge : squarefree_part(ge);

  std::vector<MultiPoly> both = elim;
  both.push_back(sd);
  if (single_variable(both)) {
    v.exact = true;
    v.equal = sd == se;
    if (!v.equal) {
      // Witness: a real root of one radical where the other does not vanish.
      for (const auto* pair : {&sd, &se}) {
        const MultiPoly& a = *pair;
        const MultiPoly& b = pair == &sd ? se : sd;
        if (a.is_zero() || a.is_constant()) continue;
        std::size_t var = *single_variable({a});
        std::vector<double> c(a.degree() + 1, 0.0);
        for (const auto& t : a.terms()) c[t.exp[var]] = t.coef.get_d();
        for (double r : real_roots(c)) {
          std::vector<double> x(delta.ring().size(), 0.0);
          x[var] = r;
          if (b.is_zero() || relative_residual(b, x) > tol || b.is_constant()) {
            v.witness = x;
            return v;
          }
        }
      }
    }
    return v;
  }

  std::mt19937_64 rng(seed);
  v.equal = true;
  for (const auto& x : points_on(sd, rng, points)) {
    ++v.delta_points;
    double r = max_residual(elim, x);
    v.max_residual = std::max(v.max_residual, r);
    if (r >= tol && v.equal) {
      v.equal = false;
      v.witness = x;
    }
  }
  if (!se.is_constant() && !se.is_zero()) {
    for (const auto& x : points_on(se, rng, points)) {
      ++v.eliminant_points;
      double r = std::max(relative_residual(sd, x), max_residual(elim, x));
      v.max_residual = std::max(v.max_residual, r);
      if (relative_residual(sd, x) >= tol && v.equal) {
        v.equal = false;
        v.witness = x;
      }
    }
  }
  if (v.delta_points == 0 || v.eliminant_points == 0) v.equal = false;
  return v;
}

// ---------------------------------------------------------------- rays

namespace {


std::vector<double> tau_coefficients(const HyperbolicSymbol& P, const std::vector<double>& xi) {
  std::vector<double> c(P.m + 1, 0.0);
  for (const auto& t : P.P.terms()) {
    double v = t.coef.get_d();
    for (std::size_t i = 0; i < xi.size(); ++i)
      if (t.exp[i + 1]) v *= std::pow(xi[i], t.exp[i + 1]);
    c[t.exp[0]] += v;
  }
  return c;
}

}  // namespace

std::vector<RaySample> rays_at(const HyperbolicSymbol& P, const MultiPoly& F, const std::vector<double>& z,
                               const std::vector<double>& t_values, double collision_tol) {
  const std::size_t n = z.size();
  std::vector<double> xi(n);
  for (std::size_t i = 0; i < n; ++i) xi[i] = F.derivative(i).evaluate(std::span<const double>(z));
  auto roots = real_roots(tau_coefficients(P, xi));
  if (roots.size() != static_cast<std::size_t>(P.m))
    throw Error(ErrorCode::VerificationFailed, "symbol has " + std::to_string(roots.size()) + " real roots, expected " +
                                                   std::to_string(P.m));
  for (std::size_t j = 1; j < roots.size(); ++j)
    if (roots[j] - roots[j - 1] < collision_tol * (1 + std::abs(roots[j])))
      throw Error(ErrorCode::VerificationFailed, "root collision");
  MultiPoly Ptau = P.P.derivative(0);
  std::vector<RaySample> out;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    std::vector<double> pt{roots[j]};
    pt.insert(pt.end(), xi.begin(), xi.end());
    const double pt_tau = Ptau.evaluate(std::span<const double>(pt));
    std::vector<double> grad(n);
    for (std::size_t i = 0; i < n; ++i) grad[i] = -P.P.derivative(i + 1).evaluate(std::span<const double>(pt)) / pt_tau;
    const double rs = relative_residual(P.P, pt);
    for (double t : t_values) {
      RaySample r;
      r.z = z;
      r.sheet = static_cast<int>(j);
      r.t = t;
      r.x.resize(n);
      for (std::size_t i = 0; i < n; ++i) r.x[i] = z[i] + t * grad[i];
      r.residual_symbol = rs;
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace kernels {

namespace {

struct Line {
  std::vector<Rational> c, d;
};

std::vector<Line> draw_lines(std::size_t n, std::size_t count, std::uint64_t seed, double box) {
  std::mt19937_64 rng(seed);
  std::vector<Line> lines(count);
  for (auto& l : lines) {
    l.c.resize(n);
    l.d.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      l.c[i] = random_rational(rng, static_cast<int>(box));
      l.d[i] = random_rational(rng, 1);
    }
  }
  return lines;
}

// Samples contributed by one line: every real front point inside the box.
RaySampleSet process_line(const HyperbolicSymbol& P, const MultiPoly& Fs, const MultiPoly& F, const Line& l,
                          const RaySampleOptions& opt) {
  RaySampleSet out;
  const std::size_t n = F.ring().size();
  for (double lam : real_roots(to_double(restrict_to_line(Fs, l.c, l.d)))) {
    std::vector<double> z(n);
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = l.c[i].get_d() + lam * l.d[i].get_d();
      inside = inside && std::abs(z[i]) <= opt.box;
    }
    if (!inside) continue;
    const double rf = relative_residual(Fs, z);
    try {
      auto rays = rays_at(P, F, z, opt.t_values, opt.collision_tol);
      if (rf > opt.accept_tol || rays.front().residual_symbol > opt.accept_tol) {
        ++out.skipped;
        continue;
      }
      for (auto& r : rays) {
        r.residual_front = rf;
        out.samples.push_back(std::move(r));
      }
    } catch (const Error&) {
      ++out.skipped;
    }
  }
  return out;
}

RaySampleSet merge(std::vector<RaySampleSet>& parts, const RaySampleOptions& opt, std::size_t per_point) {
  RaySampleSet all;
  const std::size_t want = opt.count * per_point;
  for (auto& p : parts) {
    all.skipped += p.skipped;
    for (auto& s : p.samples) {
      if (all.samples.size() == want) break;
      all.samples.push_back(std::move(s));
    }
  }
  return all;
}

std::size_t line_budget(const RaySampleOptions& opt) { return 4 * opt.count + 16; }

}  // namespace

RaySampleSet sample_front_serial(const HyperbolicSymbol& P, const MultiPoly& F, const Rational& s,
                                 const RaySampleOptions& opt) {
  const MultiPoly Fs = F - MultiPoly::constant(F.ring(), s);
  auto lines = draw_lines(F.ring().size(), line_budget(opt), opt.seed, opt.box);
  std::vector<RaySampleSet> parts(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) parts[i] = process_line(P, Fs, F, lines[i], opt);
  return merge(parts, opt, P.m * opt.t_values.size());
}

RaySampleSet sample_front_parallel(const HyperbolicSymbol& P, const MultiPoly& F, const Rational& s,
                                   const RaySampleOptions& opt) {
  const MultiPoly Fs = F - MultiPoly::constant(F.ring(), s);
  auto lines = draw_lines(F.ring().size(), line_budget(opt), opt.seed, opt.box);
  std::vector<RaySampleSet> parts(lines.size());
  const long long count = static_cast<long long>(lines.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i)
    parts[static_cast<std::size_t>(i)] = process_line(P, Fs, F, lines[static_cast<std::size_t>(i)], opt);
  return merge(parts, opt, P.m * opt.t_values.size());
}

}  // namespace kernels

RaySampleSet sample_front(const HyperbolicSymbol& P, const MultiPoly& F, const Rational& s,
                          const RaySampleOptions& opt) {
  return kernels::sample_front_parallel(P, F, s, opt);
}

FrontEvalReport eval_front_on_samples(const MultiPoly& phi, const std::vector<RaySample>& samples, double tol) {
  FrontEvalReport rep;
  rep.no_data = samples.empty();
  for (const auto& s : samples) {
    std::vector<double> pt = s.x;
    pt.push_back(s.t);
    double r = relative_residual(phi, pt);
    ++rep.samples;
    if (r >= rep.max_residual) {
      rep.max_residual = r;
      rep.witness = pt;
    }
  }
  rep.passed = rep.no_data || rep.max_residual < tol;
  return rep;
}

void write_ray_csv(std::ostream& os, const std::vector<RaySample>& samples, const std::vector<double>& phi_residuals) {
  if (samples.empty()) return;
  const std::size_t n = samples.front().z.size();
  for (std::size_t i = 1; i <= n; ++i) os << "z" << i << ",";
  os << "sheet,t";
  for (std::size_t i = 1; i <= n; ++i) os << ",x" << i;
  os << ",residual_front,residual_symbol";
  if (!phi_residuals.empty()) os << ",residual_phi";
  os << "\n" << std::setprecision(17);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& s = samples[k];
    for (double v : s.z) os << v << ",";
    os << s.sheet << "," << s.t;
    for (double v : s.x) os << "," << v;
    os << "," << s.residual_front << "," << s.residual_symbol;
    if (!phi_residuals.empty()) os << "," << phi_residuals[k];
    os << "\n";
  }
}

}  // namespace leray
