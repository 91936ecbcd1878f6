#include "leray/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "leray/errors.hpp"

namespace leray {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Grevlex:
      return grevlex_compare(a, b);
    case Kind::Elimination: {
      Monomial ha(a.begin(), a.begin() + split_), hb(b.begin(), b.begin() + split_);
      if (int c = grevlex_compare(ha, hb)) return c;
      Monomial ta(a.begin() + split_, a.end()), tb(b.begin() + split_, b.end());
      return grevlex_compare(ta, tb);
    }
  }
  return 0;
}

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder order, std::vector<MultiPoly> gens, std::vector<Monomial> leads)
    : ring_(std::move(ring)), order_(order), gens_(std::move(gens)), leads_(std::move(leads)) {}

bool GroebnerBasis::is_unit() const {
  return leads_.size() == 1 && total_degree(leads_.front()) == 0;
}

Monomial leading_monomial(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error(ErrorCode::Internal, "leading monomial of zero");
  const Monomial* best = &p.terms().front().exp;
  for (const auto& t : p.terms())
    if (order.compare(t.exp, *best) > 0) best = &t.exp;
  return *best;
}

namespace {

// Polynomial in order-sorted form (descending), monic for basis elements.
struct OPoly {
  std::vector<Term> terms;
  const Monomial& lm() const { return terms.front().exp; }
  const Rational& lc() const { return terms.front().coef; }
};

struct Desc {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

using Accum = std::map<Monomial, Rational, Desc>;

OPoly to_opoly(const MultiPoly& p, const MonomialOrder& order) {
  OPoly r{p.terms()};
  std::sort(r.terms.begin(), r.terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.exp, b.exp) > 0; });
  return r;
}

void make_monic(OPoly& p) {
  if (p.terms.empty()) return;
  Rational inv = 1 / p.lc();
  for (auto& t : p.terms) t.coef *= inv;
}

void add_scaled_shift(Accum& acc, const OPoly& g, const Monomial& shift, const Rational& c) {
  for (const auto& t : g.terms) {
    Monomial e = t.exp;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
    auto [it, fresh] = acc.try_emplace(std::move(e), c * t.coef);
    if (!fresh) {
      it->second += c * t.coef;
      if (it->second == 0) acc.erase(it);
    }
  }
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

// Full reduction of p by the polynomials selected by `active`.
OPoly reduce_full(const OPoly& p, const std::vector<OPoly>& basis, const std::vector<std::size_t>& active,
                  const MonomialOrder& order) {
  Accum acc{Desc{&order}};
  for (const auto& t : p.terms) acc.emplace(t.exp, t.coef);
  OPoly rem;
  while (!acc.empty()) {
    auto it = acc.begin();
    const OPoly* divisor = nullptr;
    for (auto idx : active)
      if (divides(basis[idx].lm(), it->first)) {
        divisor = &basis[idx];
        break;
      }
    if (!divisor) {
      rem.terms.push_back({it->first, it->second});
      acc.erase(it);
      continue;
    }
    Monomial shift = quotient(it->first, divisor->lm());
    Rational c = -it->second / divisor->lc();
    add_scaled_shift(acc, *divisor, shift, c);
  }
  return rem;
}

OPoly spoly(const OPoly& f, const OPoly& g, const MonomialOrder& order) {
  Monomial l = monomial_lcm(f.lm(), g.lm());
  Accum acc{Desc{&order}};
  add_scaled_shift(acc, f, quotient(l, f.lm()), 1 / f.lc());
  add_scaled_shift(acc, g, quotient(l, g.lm()), -1 / g.lc());
  OPoly r;
  for (auto& [e, c] : acc) r.terms.push_back({e, c});
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis groebner(const std::vector<MultiPoly>& gens, const MonomialOrder& order, const GroebnerLimits& limits) {
  if (gens.empty()) throw Error(ErrorCode::Internal, "groebner: empty generator list");
  const Ring ring = gens.front().ring();
  for (const auto& g : gens) require_same_ring(ring, g.ring(), "groebner");

  std::vector<OPoly> store;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  // Gebauer-Moeller update with the new element h = store[hi].
  auto update = [&](std::size_t hi) {
    const Monomial& lh = store[hi].lm();
    std::vector<Pair> c;
    for (auto g : active) c.push_back({g, hi, monomial_lcm(store[g].lm(), lh)});
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = coprime(store[p.i].lm(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q)
          if (divides(c[q].lcm, p.lcm)) keep = false;
        for (std::size_t q = 0; q < d.size() && keep; ++q)
          if (divides(d[q].lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (auto& p : d)
      if (!coprime(store[p.i].lm(), lh)) e.push_back(std::move(p));
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      bool drop = divides(lh, p.lcm) && monomial_lcm(store[p.i].lm(), lh) != p.lcm &&
                  monomial_lcm(lh, store[p.j].lm()) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : e) kept.push_back(std::move(p));
    pairs = std::move(kept);
    std::vector<std::size_t> next;
    for (auto g : active)
      if (!divides(lh, store[g].lm())) next.push_back(g);
    next.push_back(hi);
    active = std::move(next);
  };

  auto add = [&](OPoly h) {
    make_monic(h);
    store.push_back(std::move(h));
    update(store.size() - 1);
  };

  // Seed with the inputs, each reduced by what is already present.
  std::vector<OPoly> seeds;
  for (const auto& g : gens)
    if (!g.is_zero()) seeds.push_back(to_opoly(g, order));
  std::sort(seeds.begin(), seeds.end(),
            [&](const OPoly& a, const OPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });
  for (auto& s : seeds) {
    OPoly r = reduce_full(s, store, active, order);
    if (!r.terms.empty()) add(std::move(r));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return order.compare(a.lcm, b.lcm) < 0;
    });
    Pair p = std::move(*best);
    pairs.erase(best);
    if (++processed > limits.max_pairs)
      throw Error(ErrorCode::ResourceLimit, "groebner: pair limit " + std::to_string(limits.max_pairs) + " exceeded");
    if (total_degree(p.lcm) > limits.max_degree)
      throw Error(ErrorCode::ResourceLimit, "groebner: degree limit " + std::to_string(limits.max_degree) + " exceeded");
    OPoly s = spoly(store[p.i], store[p.j], order);
    OPoly r = reduce_full(s, store, active, order);
    if (!r.terms.empty()) add(std::move(r));
  }

  // Interreduce to the reduced basis.
  std::sort(active.begin(), active.end(),
            [&](std::size_t a, std::size_t b) { return order.compare(store[a].lm(), store[b].lm()) < 0; });
  std::vector<MultiPoly> out;
  std::vector<Monomial> leads;
  for (std::size_t k = 0; k < active.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < active.size(); ++q)
      if (q != k) others.push_back(active[q]);
    const OPoly& g = store[active[k]];
    OPoly tail{std::vector<Term>(g.terms.begin() + 1, g.terms.end())};
    OPoly red = reduce_full(tail, store, others, order);
    std::vector<Term> terms{g.terms.front()};
    terms.insert(terms.end(), red.terms.begin(), red.terms.end());
    leads.push_back(g.lm());
    out.push_back(MultiPoly::from_terms(ring, std::move(terms)));
  }
  return GroebnerBasis(ring, order, std::move(out), std::move(leads));
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
  require_same_ring(p.ring(), gb.ring(), "normal_form");
  std::vector<OPoly> basis;
  std::vector<std::size_t> active;
  for (const auto& g : gb.generators()) {
    basis.push_back(to_opoly(g, gb.order()));
    active.push_back(active.size());
  }
  OPoly r = reduce_full(to_opoly(p, gb.order()), basis, active, gb.order());
  return MultiPoly::from_terms(p.ring(), std::move(r.terms));
}

Staircase standard_monomials(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring().size();
  Staircase st;
  if (gb.is_unit()) {
    st.finite = true;
    return st;
  }
  std::vector<int> bound(n, -1);
  for (const auto& lm : gb.leading_monomials()) {
    std::size_t nz = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i]) ++nz, var = i;
    if (nz == 1 && (bound[var] < 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0) {
      st.ray = i;
      return st;
    }
  st.finite = true;
  Monomial cur(n, 0);
  auto standard = [&](const Monomial& m) {
    for (const auto& lm : gb.leading_monomials())
      if (divides(lm, m)) return false;
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      if (standard(cur)) st.monomials.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      cur[v] = e;
      rec(v + 1);
    }
    cur[v] = 0;
  };
  rec(0);
  const auto& order = gb.order();
  std::sort(st.monomials.begin(), st.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return st;
}

std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::vector<std::string>& drop,
                                 const GroebnerLimits& limits) {
  if (gens.empty()) return {};
  const Ring& ring = gens.front().ring();
  std::vector<std::string> first, rest;
  for (const auto& d : drop) {
    if (!ring.index(d)) throw Error(ErrorCode::UnknownVariable, "eliminate: unknown variable " + d);
    first.push_back(d);
  }
  for (const auto& name : ring.names())
    if (std::find(drop.begin(), drop.end(), name) == drop.end()) rest.push_back(name);
  std::vector<std::string> all = first;
  all.insert(all.end(), rest.begin(), rest.end());
  Ring block(all);
  std::vector<MultiPoly> moved;
  for (const auto& g : gens) moved.push_back(g.in_ring(block));
  GroebnerBasis gb = groebner(moved, MonomialOrder::elimination(first.size()), limits);
  Ring kept(rest);
  std::vector<MultiPoly> out;
  for (const auto& g : gb.generators()) {
    bool uses = false;
    for (std::size_t i = 0; i < first.size(); ++i) uses = uses || g.uses_variable(i);
    if (!uses) out.push_back(g.in_ring(kept));
  }
  return out;
}

}  // namespace leray
