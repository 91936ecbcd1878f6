#include "leray/gcd.hpp"

#include "leray/errors.hpp"

namespace leray {
namespace {

std::vector<MultiPoly> split(const MultiPoly& p, std::size_t v) {
  std::vector<MultiPoly> out(p.degree_in(v) + 1, MultiPoly(p.ring()));
  std::vector<std::vector<Term>> buckets(out.size());
  for (const auto& t : p.terms()) {
    Monomial e = t.exp;
    int d = e[v];
    e[v] = 0;
    buckets[d].push_back({std::move(e), t.coef});
  }
  for (std::size_t d = 0; d < out.size(); ++d) out[d] = MultiPoly::from_terms(p.ring(), std::move(buckets[d]));
  return out;
}

MultiPoly shift(const MultiPoly& p, std::size_t v, int k) {
  Monomial e(p.ring().size(), 0);
  e[v] = k;
  return p.mul_monomial(e, 1);
}

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::Internal, "gcd: inexact division");
  return *q;
}

MultiPoly content(const MultiPoly& p, std::size_t v) {
  MultiPoly g(p.ring());
  for (const auto& c : split(p, v)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, std::size_t v) {
  const int db = b.degree_in(v);
  const MultiPoly lb = split(b, v).back();
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    MultiPoly la = split(a, v).back();
    a = a * lb - shift(la * b, v, da - db);
  }
  return a;
}

std::optional<std::size_t> first_var(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t v = 0; v < a.ring().size(); ++v)
    if (a.uses_variable(v) || b.uses_variable(v)) return v;
  return std::nullopt;
}


// Integer-coefficient helpers for the heuristic gcd.

Integer int_content(const MultiPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  return g;
}

Integer max_norm(const MultiPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    Integer a = abs(t.coef.get_num());
    if (a > m) m = a;
  }
  return m;
}

MultiPoly eval_var(const MultiPoly& p, std::size_t v, const Integer& xi) {
  std::vector<Integer> powers{1};
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    const int e = t.exp[v];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * xi);
    Monomial m = t.exp;
    m[v] = 0;
    ts.push_back({std::move(m), t.coef * Rational(powers[e])});
  }
  return MultiPoly::from_terms(p.ring(), std::move(ts));
}

// Inverse of eval_var for polynomials whose coefficients are below xi/2.
MultiPoly xi_adic(MultiPoly g, std::size_t v, const Integer& xi) {
  std::vector<Term> out;
  const Integer half = xi / 2;
  for (int k = 0; !g.is_zero(); ++k) {
    std::vector<Term> digit;
    for (const auto& t : g.terms()) {
      Integer r = t.coef.get_num() % xi;  // sign of the dividend
      if (r > half) r -= xi;
      if (r < -half) r += xi;
      if (r != 0) digit.push_back({t.exp, Rational(r)});
    }
    MultiPoly d = MultiPoly::from_terms(g.ring(), digit);
    for (auto t : digit) {
      t.exp[v] = k;
      out.push_back(std::move(t));
    }
    g -= d;
    g *= Rational(1) / Rational(xi);
  }
  return MultiPoly::from_terms(g.ring(), std::move(out));
}

MultiPoly prs_gcd(const MultiPoly& a, const MultiPoly& b);

// gcd in Z[vars] of integral a, b, including the integer content.
MultiPoly z_gcd(const MultiPoly& a, const MultiPoly& b) {
  const Integer ca = int_content(a), cb = int_content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  auto vo = first_var(a, b);
  if (!vo) return MultiPoly::constant(a.ring(), Rational(c));
  if (!a.uses_variable(*vo) || !b.uses_variable(*vo)) {
    // gcd lies in the coefficients of the variable missing from one side.
    const MultiPoly& with = a.uses_variable(*vo) ? a : b;
    const MultiPoly& without = a.uses_variable(*vo) ? b : a;
    MultiPoly g = without;
    for (const auto& coeff : split(with, *vo)) {
      if (coeff.is_zero()) continue;
      g = z_gcd(g, coeff);
      if (g.is_constant()) break;
    }
    return g;
  }
  const MultiPoly A = a * (Rational(1) / Rational(ca)), B = b * (Rational(1) / Rational(cb));
  const std::size_t v = *vo;
  Integer xi = 2 * std::min(max_norm(A), max_norm(B)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    MultiPoly ga = eval_var(A, v, xi), gb = eval_var(B, v, xi);
    if (!ga.is_zero() && !gb.is_zero()) {
      MultiPoly gamma = z_gcd(ga, gb);
      MultiPoly g = xi_adic(gamma, v, xi);
      if (!g.is_zero()) {
        g = primitive_normalize(g);
        if (divide_exact(A, g) && divide_exact(B, g)) return g * Rational(c);
      }
    }
    xi = xi * 73794 / 27011;
  }
  return prs_gcd(A, B) * Rational(c);
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring(), b.ring(), "poly_gcd");
  if (a.is_zero()) return primitive_normalize(b);
  if (b.is_zero()) return primitive_normalize(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.ring(), 1);
  return primitive_normalize(z_gcd(primitive_normalize(a), primitive_normalize(b)));
}

namespace {

// Recursive primitive PRS; the fallback when the heuristic keeps failing.
MultiPoly prs_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return primitive_normalize(b);
  if (b.is_zero()) return primitive_normalize(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.ring(), 1);
  auto vo = first_var(a, b);
  const std::size_t v = *vo;
  if (!a.uses_variable(v)) return prs_gcd(a, content(b, v));
  if (!b.uses_variable(v)) return prs_gcd(content(a, v), b);

  MultiPoly ca = content(a, v), cb = content(b, v);
  MultiPoly pa = exact(a, ca), pb = exact(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  MultiPoly g(a.ring());
  for (;;) {
    MultiPoly r = pseudo_rem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = MultiPoly::constant(a.ring(), 1);
      break;
    }
    pa = std::move(pb);
    pb = exact(r, content(r, v));
  }
  if (!g.is_constant()) g = exact(g, content(g, v));
  return primitive_normalize(prs_gcd(ca, cb) * g);
}

}  // namespace

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return MultiPoly::constant(p.ring(), 1);
  MultiPoly g = p;
  for (std::size_t v = 0; v < p.ring().size() && !g.is_constant(); ++v)
    if (p.uses_variable(v)) g = poly_gcd(g, p.derivative(v));
  return primitive_normalize(exact(p, g));
}

}  // namespace leray
