#include "leray/brieskorn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "leray/errors.hpp"
#include "leray/linalg.hpp"

namespace leray {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : m) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    return h;
  }
};

// All exponent vectors of the given weight, in a fixed (lexicographic) order.
std::vector<Monomial> monomials_of_weight(std::span<const int> v, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(v.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == v.size()) {
      if (left % v[i] == 0) {
        cur[i] = left / v[i];
        out.push_back(cur);
        cur[i] = 0;
      }
      return;
    }
    for (int e = 0; e * v[i] <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e * v[i]);
    }
    cur[i] = 0;
  };
  if (!v.empty()) rec(0, d);
  else if (d == 0) out.push_back(cur);
  return out;
}

std::vector<FormIndex> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<FormIndex> out;
  for (FormIndex s = 0; s < (FormIndex{1} << n); ++s)
    if (static_cast<std::size_t>(index_degree(s)) == k) out.push_back(s);
  return out;
}

int index_weight(std::span<const int> v, FormIndex s) {
  int w = 0;
  for (auto i : index_list(s)) w += v[i];
  return w;
}

// Coordinates (index set, monomial) -> column of a graded piece of forms.
class FormCoords {
 public:
  std::uint32_t id(FormIndex s, const Monomial& m) {
    auto& tab = by_index_[s];
    auto [it, fresh] = tab.try_emplace(m, next_);
    if (fresh) ++next_;
    return it->second;
  }
  SparseVec vec(const DiffForm& f) {
    SparseVec v;
    for (const auto& [s, p] : f.components())
      for (const auto& t : p.terms()) v.emplace_back(id(s, t.exp), t.coef);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }
  std::uint32_t size() const { return next_; }

 private:
  std::map<FormIndex, std::unordered_map<Monomial, std::uint32_t, MonomialHash>> by_index_;
  std::uint32_t next_ = 0;
};

std::size_t dim_bound_hint = 1u << 28;

// Restriction used to compute F: components c*u_k are removed together with u_k.
struct Restricted {
  IcisMap map;
  std::vector<std::size_t> to_full;  // variable index in the original ring
  std::vector<std::string> dropped;
};

Restricted drop_linear_components(const IcisMap& map) {
  Restricted r{map, {}, {}};
  r.to_full.resize(map.ring.size());
  std::iota(r.to_full.begin(), r.to_full.end(), 0);
  for (;;) {
    std::optional<std::size_t> comp, var;
    for (std::size_t l = 0; l < r.map.K() && !comp; ++l) {
      const auto& f = r.map.f[l];
      if (f.size() == 1 && total_degree(f.terms().front().exp) == 1) {
        comp = l;
        const auto& e = f.terms().front().exp;
        var = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
      }
    }
    if (!comp || r.map.K() == 1) return r;
    std::vector<std::string> names;
    std::vector<int> v;
    std::vector<std::size_t> to_full;
    for (std::size_t i = 0; i < r.map.ring.size(); ++i)
      if (i != *var) {
        names.push_back(r.map.ring.name(i));
        v.push_back(r.map.v[i]);
        to_full.push_back(r.to_full[i]);
      }
    int g = 0;
    for (int x : v) g = std::gcd(g, x);
    if (g != 1) return r;
    Ring ring(names);
    std::vector<MultiPoly> f;
    bool degenerate = false;
    for (std::size_t l = 0; l < r.map.K(); ++l) {
      if (l == *comp) continue;
      std::vector<Term> ts;
      for (const auto& t : r.map.f[l].terms()) {
        if (t.exp[*var]) continue;
        Monomial e;
        for (std::size_t i = 0; i < t.exp.size(); ++i)
          if (i != *var) e.push_back(t.exp[i]);
        ts.push_back({e, t.coef});
      }
      MultiPoly q = MultiPoly::from_terms(ring, std::move(ts));
      degenerate = degenerate || q.is_zero();
      f.push_back(std::move(q));
    }
    if (degenerate) return r;
    r.dropped.push_back(r.map.ring.name(*var));
    r.map = IcisMap::make(std::move(f), std::move(v), map.power);
    r.to_full = std::move(to_full);
  }
}

// Greedy F classes on a map, per weight. `want` = 0 means collect everything up to the cap.
struct FScan {
  std::vector<DiffForm> reps;
  std::vector<int> weights;
  std::map<int, std::size_t> per_weight;
};

FScan scan_f(const IcisMap& map, std::size_t want, int cap) {
  const std::size_t nv = map.ring.size(), N = map.N();
  EulerField euler(map.v);
  FScan out;
  auto top_sets = subsets_of_size(nv, N + 1);
  auto low_sets = subsets_of_size(nv, N);
  auto high_sets = subsets_of_size(nv, N + 2);
  std::vector<DiffForm> dfs;
  for (const auto& f : map.f) dfs.push_back(DiffForm::exact(f));
  int start = cap;
  for (auto s : top_sets) start = std::min(start, index_weight(map.v, s));
  for (int d = start; d <= cap; ++d) {
    FormCoords coords;
    SparseEchelon ech(dim_bound_hint);
    for (std::size_t l = 0; l < map.K(); ++l)
      for (auto s : low_sets)
        for (const auto& m : monomials_of_weight(map.v, d - map.p[l] - index_weight(map.v, s))) {
          auto g = wedge(dfs[l], DiffForm::basis(MultiPoly::monomial(map.ring, m), s));
          if (!g.is_zero()) ech.insert(coords.vec(g));
        }
    for (auto s : high_sets)
      for (const auto& m : monomials_of_weight(map.v, d - index_weight(map.v, s))) {
        auto g = contract_euler(DiffForm::basis(MultiPoly::monomial(map.ring, m), s), euler);
        if (!g.is_zero()) ech.insert(coords.vec(g));
      }
    std::size_t found = 0;
    for (auto s : top_sets) {
      auto ms = monomials_of_weight(map.v, d - index_weight(map.v, s));
      std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
      for (const auto& m : ms) {
        auto cand = DiffForm::basis(MultiPoly::monomial(map.ring, m), s);
        if (ech.insert(coords.vec(cand))) {
          out.reps.push_back(cand);
          out.weights.push_back(d);
          ++found;
          if (want && out.reps.size() == want) break;
        }
      }
      if (want && out.reps.size() == want) break;
    }
    if (found) out.per_weight[d] = found;
    if (want && out.reps.size() == want) break;
  }
  return out;
}

}  // namespace

PhiBasis phi_basis_from_staircase(const IcisMap& map, const Staircase& st) {
  if (!st.finite) throw Error(ErrorCode::NotIsolated, "Phi staircase is infinite");
  PhiBasis b;
  const int sv = std::accumulate(map.v.begin(), map.v.end(), 0);
  b.monomials = st.monomials;
  for (const auto& m : b.monomials) b.weights.push_back(monomial_weight(m, map.v) + sv);
  return b;
}

PhiBasis phi_basis(const IcisMap& map, const GroebnerLimits& limits) {
  return phi_basis_from_staircase(map, isolated_staircase(map, limits));
}

FBasis f_basis(const IcisMap& map, std::size_t mu, int weight_cap) {
  if (weight_cap <= 0) weight_cap = 4 * std::accumulate(map.p.begin(), map.p.end(), 0);
  Restricted r = drop_linear_components(map);
  FScan scan = scan_f(r.map, mu, weight_cap);
  if (scan.reps.size() < mu)
    throw Error(ErrorCode::CapExceeded, "F basis: found " + std::to_string(scan.reps.size()) + " of " +
                                            std::to_string(mu) + " classes below weight " + std::to_string(weight_cap));
  FBasis fb;
  fb.dropped = r.dropped;
  EulerField euler(map.v);
  for (std::size_t i = 0; i < scan.reps.size(); ++i) {
    DiffForm rep = scan.reps[i].embed(map.ring, r.to_full);
    DiffForm exact = exterior_d(contract_euler(rep, euler)).scaled(Rational(1, scan.weights[i]));
    fb.representatives.push_back(rep);
    fb.forms.push_back(std::move(exact));
    fb.weights.push_back(scan.weights[i]);
  }
  return fb;
}

std::map<int, std::size_t> f_space_dimensions(const IcisMap& map, int weight_cap) {
  return scan_f(map, 0, weight_cap).per_weight;
}

Ring parameter_ring(std::size_t K) {
  std::vector<std::string> names;
  for (std::size_t l = 0; l < K; ++l) names.push_back("y" + std::to_string(l));
  return Ring(names);
}

// --------------------------------------------------------------- lattice

struct LatticeReducer::Piece {
  FormCoords coords;
  SparseEchelon echelon{dim_bound_hint, true};
  // Generator g < eta_count is an eta monomial form; above are (j, beta) pairs.
  std::vector<DiffForm> eta_gens;
  std::vector<std::pair<std::size_t, Monomial>> phi_gens;
};

LatticeReducer::LatticeReducer(const IcisMap& map, const PhiBasis& basis)
    : map_(map), basis_(basis), y_ring_(parameter_ring(map.K())), theta_(map.ring, 0) {
  theta_ = DiffForm::function(MultiPoly::constant(map.ring, 1));
  for (const auto& f : map.f) theta_ = wedge(theta_, DiffForm::exact(f));
}

LatticeReducer::~LatticeReducer() = default;

std::size_t LatticeReducer::cached_weights() const { return pieces_.size(); }

LatticeReducer::Piece& LatticeReducer::piece(int d) {
  auto it = pieces_.find(d);
  if (it != pieces_.end()) return *it->second;
  auto pc = std::make_unique<Piece>();
  const std::size_t nv = map_.ring.size(), N = map_.N();
  const int sp = std::accumulate(map_.p.begin(), map_.p.end(), 0);
  std::uint32_t gen = 0;
  if (N >= 1) {
    for (auto s : subsets_of_size(nv, N - 1))
      for (const auto& m : monomials_of_weight(map_.v, d - sp - index_weight(map_.v, s))) {
        DiffForm eta = DiffForm::basis(MultiPoly::monomial(map_.ring, m), s);
        DiffForm img = wedge(theta_, exterior_d(eta));
        if (!img.is_zero()) pc->echelon.insert(pc->coords.vec(img), SparseVec{{gen, Rational(1)}});
        pc->eta_gens.push_back(std::move(eta));
        ++gen;
      }
  }
  const FormIndex all = (nv == 64) ? ~FormIndex{0} : ((FormIndex{1} << nv) - 1);
  for (std::size_t j = 0; j < basis_.mu(); ++j)
    for (const auto& beta : monomials_of_weight(map_.p, d - basis_.weights[j])) {
      auto fp = fpow_.find(beta);
      if (fp == fpow_.end()) {
        MultiPoly acc = MultiPoly::constant(map_.ring, 1);
        for (std::size_t l = 0; l < beta.size(); ++l) acc *= map_.f[l].pow(static_cast<unsigned>(beta[l]));
        fp = fpow_.emplace(beta, std::move(acc)).first;
      }
      MultiPoly g = fp->second.mul_monomial(basis_.monomials[j], 1);
      pc->echelon.insert(pc->coords.vec(DiffForm::basis(g, all)), SparseVec{{gen, Rational(1)}});
      pc->phi_gens.emplace_back(j, beta);
      ++gen;
    }
  return *pieces_.emplace(d, std::move(pc)).first->second;
}

LatticeCertificate LatticeReducer::reduce(const DiffForm& g) {
  const std::size_t nv = map_.ring.size(), N = map_.N();
  LatticeCertificate cert{g, std::vector<MultiPoly>(basis_.mu(), MultiPoly(y_ring_)),
                          DiffForm(map_.ring, N >= 1 ? static_cast<int>(N) - 1 : 0)};
  if (g.degree() != static_cast<int>(nv)) throw Error(ErrorCode::Internal, "lattice reduction needs a top form");
  if (g.is_zero()) return cert;
  EulerField euler(map_.v);
  auto w = g.weight(euler);
  if (!w) throw Error(ErrorCode::Internal, "lattice reduction needs a weighted-homogeneous form");
  Piece& pc = piece(*w);
  auto red = pc.echelon.reduce(pc.coords.vec(g));
  if (!red.remainder.empty())
    throw Error(ErrorCode::NoLatticeSolution,
                "form is not in the span of f^beta phi_j du modulo the lattice relations at weight " +
                    std::to_string(*w));
  std::vector<std::vector<Term>> rows(basis_.mu());
  for (const auto& [gen, c] : red.combination) {
    if (gen < pc.eta_gens.size()) {
      cert.eta += pc.eta_gens[gen].scaled(c);
    } else {
      const auto& [j, beta] = pc.phi_gens[gen - pc.eta_gens.size()];
      rows[j].push_back({beta, c});
    }
  }
  for (std::size_t j = 0; j < basis_.mu(); ++j) cert.row[j] = MultiPoly::from_terms(y_ring_, std::move(rows[j]));
  return cert;
}

bool LatticeReducer::verify(const LatticeCertificate& c) const {
  const std::size_t nv = map_.ring.size();
  const FormIndex all = (nv == 64) ? ~FormIndex{0} : ((FormIndex{1} << nv) - 1);
  std::map<std::string, MultiPoly> b;
  for (std::size_t l = 0; l < map_.K(); ++l) b.emplace(y_ring_.name(l), map_.f[l]);
  DiffForm sum(map_.ring, static_cast<int>(nv));
  for (std::size_t j = 0; j < basis_.mu(); ++j) {
    if (c.row[j].is_zero()) continue;
    MultiPoly pj = poly_substitute_into(c.row[j], b, map_.ring);
    sum += DiffForm::basis(pj.mul_monomial(basis_.monomials[j], 1), all);
  }
  if (map_.N() >= 1) sum += wedge(theta_, exterior_d(c.eta));
  return sum == c.input;
}

GMMatrices gm_matrices(const IcisMap& map, const PhiBasis& phi, const FBasis& fb, LatticeReducer& reducer) {
  const std::size_t K = map.K(), mu = phi.mu();
  if (fb.forms.size() != mu) throw Error(ErrorCode::Internal, "F and Phi bases differ in size");
  GMMatrices out;
  out.L = fb.weights;
  std::vector<DiffForm> dfs;
  for (const auto& f : map.f) dfs.push_back(DiffForm::exact(f));
  for (std::size_t l = 0; l < K; ++l) {
    DiffForm rest = DiffForm::function(MultiPoly::constant(map.ring, 1));
    for (std::size_t k = 0; k < K; ++k)
      if (k != l) rest = wedge(rest, dfs[k]);
    PolyMatrix P(reducer.y_ring(), mu, mu);
    for (std::size_t i = 0; i < mu; ++i) {
      auto cert = reducer.reduce(wedge(fb.forms[i], rest));
      for (std::size_t j = 0; j < mu; ++j) P(i, j) = cert.row[j];
      out.certificates.push_back(std::move(cert));
    }
    out.P.push_back(std::move(P));
  }
  return out;
}

int forced_entry_weight(const IcisMap& map, const PhiBasis& phi, const FBasis& fb, std::size_t l, std::size_t i,
                        std::size_t j) {
  const int sp = std::accumulate(map.p.begin(), map.p.end(), 0);
  return fb.weights[i] + sp - map.p[l] - phi.weights[j];
}

}  // namespace leray
