#include "leray/numeric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/Polynomials>

namespace leray {

namespace {

double horner(const std::vector<double>& c, double x, double* deriv) {
  double v = 0, dv = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    dv = dv * x + v;
    v = v * x + c[i];
  }
  if (deriv) *deriv = dv;
  return v;
}

}  // namespace

std::vector<double> real_roots(const std::vector<double>& coeffs, double imag_tol) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<double> out;
  if (c.size() < 2) return out;
  std::size_t zeros = 0;  // roots at the origin are peeled off exactly
  while (zeros < c.size() && c[zeros] == 0) ++zeros;
  if (zeros > 0) {
    out.push_back(0.0);
    c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
  }
  if (c.size() >= 2) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) v[static_cast<Eigen::Index>(i)] = c[i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(v);
    for (const auto& r : solver.roots()) {
      if (std::abs(r.imag()) > imag_tol * (1 + std::abs(r))) continue;
      double x = r.real();
      for (int it = 0; it < 3; ++it) {
        double d;
        double f = horner(c, x, &d);
        if (d == 0 || !std::isfinite(f / d)) break;
        double nx = x - f / d;
        if (std::abs(nx - x) > 1e-3 * (1 + std::abs(x))) break;  // keep the eigenvalue when Newton jumps
        x = nx;
      }
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> to_double(const UPoly& p) {
  std::vector<double> d(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i].get_d();
  return d;
}

UPoly restrict_to_line(const MultiPoly& p, std::span<const Rational> c, std::span<const Rational> d) {
  Ring lam({"lambda"});
  std::map<std::string, MultiPoly> bind;
  for (std::size_t i = 0; i < p.ring().size(); ++i) {
    MultiPoly v = MultiPoly::constant(lam, c[i]) + MultiPoly::variable(lam, 0) * d[i];
    bind[p.ring().name(i)] = v;
  }
  MultiPoly q = poly_substitute_into(p, bind, lam);
  UPoly u(static_cast<std::size_t>(std::max(0, q.degree())) + 1);
  for (const auto& t : q.terms()) u[t.exp[0]] = t.coef;
  upoly_trim(u);
  return u;
}

double relative_residual(const MultiPoly& p, std::span<const double> x) {
  double den = p.evaluate_abs(x);
  if (den == 0) return 0;
  return std::abs(p.evaluate(x)) / den;
}

Rational random_rational(std::mt19937_64& rng, int scale, int den) {
  std::uniform_int_distribution<long> num(-static_cast<long>(scale) * den, static_cast<long>(scale) * den);
  Rational r(num(rng), den);
  r.canonicalize();
  return r;
}

}  // namespace leray
