#include "leray/phase.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "leray/errors.hpp"
#include "leray/linalg.hpp"
#include "leray/univariate.hpp"

namespace leray {

Ring HyperbolicSymbol::ring_for(std::size_t n) {
  std::vector<std::string> names{"tau"};
  for (std::size_t i = 1; i <= n; ++i) names.push_back("xi" + std::to_string(i));
  return Ring(names);
}

HyperbolicSymbol HyperbolicSymbol::from_poly(const MultiPoly& p) {
  if (p.ring().size() < 2) throw Error(ErrorCode::Usage, "symbol needs tau and at least one xi");
  HyperbolicSymbol s;
  s.P = p;
  s.n = p.ring().size() - 1;
  s.m = p.degree_in(0);
  if (s.m < 1) throw Error(ErrorCode::Usage, "symbol has no tau term");
  std::map<int, std::vector<Term>> by_tau;
  for (const auto& t : p.terms()) by_tau[t.exp[0]].push_back(t);
  for (const auto& [k, terms] : by_tau) {
    int want = s.m - k;
    for (const auto& t : terms) {
      int d = total_degree(t.exp) - t.exp[0];
      if (d != want)
        throw Error(ErrorCode::Usage, "coefficient of tau^" + std::to_string(k) + " is not homogeneous of degree " +
                                          std::to_string(want) + " in xi");
    }
  }
  Monomial top(p.ring().size(), 0);
  top[0] = s.m;
  if (p.coefficient(top) != 1) throw Error(ErrorCode::Usage, "symbol is not monic in tau");
  return s;
}

namespace {

WeightSystem finish_weights(std::vector<int> w, const MultiPoly& F) {
  int g = 0;
  for (int x : w) g = std::gcd(g, x);
  if (g != 1) throw Error(ErrorCode::NoPositiveSolution, "weights are not primitive");
  auto total = homogeneous_weight(F, w);
  if (!total || *total <= 0) throw Error(ErrorCode::NoPositiveSolution, "F is not quasihomogeneous for these weights");
  if (std::all_of(w.begin(), w.end(), [&](int x) { return x == w.front(); }))
    throw Error(ErrorCode::HomogeneousOnly, "all weights are equal: F is homogeneous");
  return WeightSystem{std::move(w), *total};
}

}  // namespace

WeightSystem discover_weights(const MultiPoly& F) {
  if (F.is_zero()) throw Error(ErrorCode::NoPositiveSolution, "F is zero");
  if (F.constant_term() != 0) throw Error(ErrorCode::NoPositiveSolution, "F has a constant term");
  const std::size_t n = F.ring().size();
  RationalMatrix a(F.size(), n + 1);
  for (std::size_t r = 0; r < F.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) a(r, j) = F.terms()[r].exp[j];
    a(r, n) = -1;
  }
  std::vector<Rational> zero(F.size());
  auto sol = solve_linear_exact(a, zero);
  if (!sol || sol->nullspace.empty()) throw Error(ErrorCode::NoPositiveSolution, "F is not quasihomogeneous");
  if (sol->nullspace.size() > 1)
    throw Error(ErrorCode::AmbiguousWeights, "weights are not determined by F; supply them explicitly");
  auto v = sol->nullspace.front();
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> iv;
  for (const auto& q : v) iv.push_back(Rational(q * l).get_num());
  Integer g = 0;
  for (std::size_t j = 0; j < n; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[j].get_mpz_t());
  if (g == 0) throw Error(ErrorCode::NoPositiveSolution, "F is not quasihomogeneous");
  if (iv[0] < 0) g = -g;
  std::vector<int> w;
  for (std::size_t j = 0; j < n; ++j) {
    Integer q = iv[j] / g;
    if (q <= 0) throw Error(ErrorCode::NoPositiveSolution, "no positive weight system for F");
    if (!q.fits_sint_p()) throw Error(ErrorCode::ResourceLimit, "weight too large");
    w.push_back(static_cast<int>(q.get_si()));
  }
  return finish_weights(std::move(w), F);
}

WeightSystem check_weights(const MultiPoly& F, std::vector<int> w) {
  if (w.size() != F.ring().size()) throw Error(ErrorCode::Usage, "weight count differs from variable count");
  for (int x : w)
    if (x <= 0) throw Error(ErrorCode::NoPositiveSolution, "weights must be positive");
  return finish_weights(std::move(w), F);
}

std::size_t check_c3(const MultiPoly& F) {
  std::vector<MultiPoly> gens{F};
  for (std::size_t j = 0; j < F.ring().size(); ++j) gens.push_back(F.derivative(j));
  auto st = standard_monomials(groebner(gens, MonomialOrder::grevlex()));
  if (!st.finite)
    throw Error(ErrorCode::InfiniteDimensional,
                "Q[x]/<F, grad F> is infinite-dimensional: all powers of " + F.ring().name(*st.ray) + " survive");
  return st.monomials.size();
}

bool strictly_hyperbolic_at(const HyperbolicSymbol& s, const std::vector<Rational>& xi, int* distinct) {
  UPoly u(s.m + 1);
  for (const auto& t : s.P.terms()) {
    Rational c = t.coef;
    for (std::size_t j = 0; j < s.n; ++j)
      for (int e = 0; e < t.exp[j + 1]; ++e) c *= xi[j];
    u[t.exp[0]] += c;
  }
  int count = sturm_distinct_real_roots(u);
  if (distinct) *distinct = count;
  return count == s.m;
}

HyperbolicityReport check_strict_hyperbolicity(const HyperbolicSymbol& s, std::size_t sample_count,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  HyperbolicityReport rep;
  for (std::size_t k = 0; k < sample_count; ++k) {
    std::vector<Rational> xi(s.n);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : xi) {
        long num = static_cast<long>(rng() % 21) - 10;
        long den = static_cast<long>(rng() % 6) + 1;
        c = make_rational(num, den);
        nonzero = nonzero || num != 0;
      }
    }
    ++rep.samples;
    int count = 0;
    if (!strictly_hyperbolic_at(s, xi, &count)) {
      rep.passed = false;
      rep.witness = xi;
      rep.real_roots_at_witness = count;
      return rep;
    }
  }
  return rep;
}

Ring phase_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("t");
  for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  return Ring(names);
}

MultiPoly front_in_z(const MultiPoly& F, const Ring& phase) {
  const std::size_t n = F.ring().size();
  std::vector<Term> terms;
  for (const auto& t : F.terms()) {
    Monomial e(phase.size(), 0);
    for (std::size_t j = 0; j < n; ++j) e[n + 1 + j] = t.exp[j];
    terms.push_back({e, t.coef});
  }
  return MultiPoly::from_terms(phase, std::move(terms));
}

MultiPoly build_phase(const HyperbolicSymbol& s, const MultiPoly& F) {
  const std::size_t n = F.ring().size();
  if (n != s.n) throw Error(ErrorCode::Usage, "front and symbol disagree on the space dimension");
  Ring r = phase_ring(n);
  MultiPoly Fz = front_in_z(F, r);
  MultiPoly tau(r);
  std::map<std::string, MultiPoly> b;
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly dj = Fz.derivative(n + 1 + j);
    tau += (MultiPoly::variable(r, j) - MultiPoly::variable(r, n + 1 + j)) * dj;
    b.emplace(s.P.ring().name(j + 1), MultiPoly::variable(r, n) * dj);
  }
  b.emplace(s.P.ring().name(0), tau);
  return poly_substitute_into(s.P, b, r);
}

PhaseExpansion expand_phase(const MultiPoly& psi, const MultiPoly& F, const WeightSystem& w, int m) {
  const std::size_t n = F.ring().size();
  Ring r = phase_ring(n);
  require_same_ring(psi.ring(), r, "expand_phase");
  PhaseExpansion e;
  std::vector<std::string> xt, zn;
  for (std::size_t i = 0; i <= n; ++i) xt.push_back(r.name(i));
  for (std::size_t i = 0; i < n; ++i) zn.push_back(r.name(n + 1 + i));
  e.xt_ring = Ring(xt);
  e.z_ring = Ring(zn);
  e.weights = w;
  // F is matched to z by position, whatever its variable names.
  e.F = MultiPoly::from_terms(e.z_ring, F.terms());
  MultiPoly euler(e.z_ring);
  for (std::size_t j = 0; j < n; ++j) euler += MultiPoly::variable(e.z_ring, j) * e.F.derivative(j);
  e.base = euler.pow(static_cast<unsigned>(m));
  e.sign = m % 2 ? -1 : 1;

  std::vector<Term> based;
  for (const auto& t : e.base.terms()) {
    Monomial ex(r.size(), 0);
    for (std::size_t j = 0; j < n; ++j) ex[n + 1 + j] = t.exp[j];
    based.push_back({ex, e.sign > 0 ? t.coef : Rational(-t.coef)});
  }
  MultiPoly rest = psi - MultiPoly::from_terms(r, based);

  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : rest.terms()) {
    Monomial alpha(t.exp.begin() + n + 1, t.exp.end());
    Monomial coeff(t.exp.begin(), t.exp.begin() + n + 1);
    groups[alpha].push_back({coeff, t.coef});
  }
  const int cap = m * w.total;
  for (auto& [alpha, terms] : groups) {
    int aw = monomial_weight(alpha, w.w);
    if (aw >= cap)
      throw Error(ErrorCode::BoundViolation, "deformation monomial of weight " + std::to_string(aw) +
                                                 " is not below m*w(F) = " + std::to_string(cap));
    e.terms.push_back({alpha, MultiPoly::from_terms(e.xt_ring, std::move(terms))});
  }
  std::sort(e.terms.begin(), e.terms.end(), [&](const Deformation& a, const Deformation& b) {
    int wa = monomial_weight(a.alpha, w.w), wb = monomial_weight(b.alpha, w.w);
    if ((wa == 0) != (wb == 0)) return wa == 0;
    if (wa != wb) return wa > wb;
    return grevlex_compare(a.alpha, b.alpha) > 0;
  });
  e.bound = 1;
  for (std::size_t j = 0; j < n; ++j) e.bound *= Rational(m) * Rational(w.total, w.w[j]);
  if (Rational(static_cast<long>(e.terms.size())) > e.bound)
    throw Error(ErrorCode::BoundViolation, "more deformation terms than m^n prod w(F)/w_i");
  bool has_constant = !e.terms.empty() && total_degree(e.terms.front().alpha) == 0;
  e.phase_case = has_constant ? PhaseCase::Case1 : PhaseCase::Case2;
  e.mu = e.terms.size() + (has_constant ? 0 : 1);
  return e;
}

MultiPoly reconstruct_phase(const PhaseExpansion& e, const Ring& phase) {
  const std::size_t n = e.z_ring.size();
  std::vector<Term> terms;
  for (const auto& t : e.base.terms()) {
    Monomial ex(phase.size(), 0);
    for (std::size_t j = 0; j < n; ++j) ex[n + 1 + j] = t.exp[j];
    terms.push_back({ex, e.sign > 0 ? t.coef : Rational(-t.coef)});
  }
  for (const auto& d : e.terms)
    for (const auto& t : d.W.terms()) {
      Monomial ex(phase.size(), 0);
      for (std::size_t j = 0; j <= n; ++j) ex[j] = t.exp[j];
      for (std::size_t j = 0; j < n; ++j) ex[n + 1 + j] = d.alpha[j];
      terms.push_back({ex, t.coef});
    }
  return MultiPoly::from_terms(phase, std::move(terms));
}

PhaseMap build_mapping(const PhaseExpansion& e, int power, const GroebnerLimits& limits) {
  if (power < 2) throw Error(ErrorCode::Usage, "power P must be at least 2");
  if (e.mu < 1) throw Error(ErrorCode::Usage, "phase expansion has mu = 0");
  const std::size_t n = e.z_ring.size();
  const std::size_t mu = e.mu;
  PhaseMap pm;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (total_degree(e.terms[i].alpha) == 0) pm.constant_term = i;
    else pm.coupled.push_back(i);
  }
  if (pm.coupled.size() != mu - 1) throw Error(ErrorCode::Internal, "coupled monomial count differs from mu - 1");

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n + mu; ++i) names.push_back("z" + std::to_string(i));
  Ring u(names);
  auto lift = [&](const MultiPoly& pz) {
    std::vector<Term> ts;
    for (const auto& t : pz.terms()) {
      Monomial ex(u.size(), 0);
      std::copy(t.exp.begin(), t.exp.end(), ex.begin());
      ts.push_back({ex, t.coef});
    }
    return MultiPoly::from_terms(u, std::move(ts));
  };

  std::vector<MultiPoly> f;
  f.push_back(lift(e.F));
  MultiPoly f1 = MultiPoly::variable(u, n + mu - 1).pow(static_cast<unsigned>(power)) + lift(e.base);
  for (std::size_t j = 0; j < pm.coupled.size(); ++j) {
    Monomial ex(u.size(), 0);
    std::copy(e.terms[pm.coupled[j]].alpha.begin(), e.terms[pm.coupled[j]].alpha.end(), ex.begin());
    ex[n + j] = 1;
    f1 += MultiPoly::monomial(u, ex);
  }
  f.push_back(f1);
  for (std::size_t j = 0; j + 1 < mu; ++j) f.push_back(MultiPoly::variable(u, n + j));

  // Weights: z keeps w, z_{n+1+j} gets m w(F) - w(alpha), the last gets m w(F) / P.
  const int top = *homogeneous_weight(e.base, e.weights.w);
  const int k = power / std::gcd(power, top);
  std::vector<int> v;
  for (int x : e.weights.w) v.push_back(x * k);
  for (auto idx : pm.coupled) v.push_back((top - monomial_weight(e.terms[idx].alpha, e.weights.w)) * k);
  v.push_back(top * k / power);
  int g = 0;
  for (int x : v) g = std::gcd(g, x);
  for (auto& x : v) x /= g;
  pm.rescale = k;
  pm.divisor = g;
  pm.map = IcisMap::make(std::move(f), std::move(v), power);
  pm.phi_staircase = isolated_staircase(pm.map, limits);
  return pm;
}

}  // namespace leray
