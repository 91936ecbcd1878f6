#include "leray/icis.hpp"

#include <numeric>

#include "leray/errors.hpp"
#include "leray/polymatrix.hpp"

namespace leray {

IcisMap IcisMap::make(std::vector<MultiPoly> f, std::vector<int> v, int power) {
  if (f.empty()) throw Error(ErrorCode::Internal, "map with no components");
  IcisMap m;
  m.ring = f.front().ring();
  if (v.size() != m.ring.size()) throw Error(ErrorCode::Internal, "weight count differs from variable count");
  if (f.size() > m.ring.size()) throw Error(ErrorCode::Internal, "more components than variables");
  int g = 0;
  for (int w : v) {
    if (w <= 0) throw Error(ErrorCode::Internal, "variable weights must be positive");
    g = std::gcd(g, w);
  }
  if (g != 1) throw Error(ErrorCode::Internal, "variable weights must have gcd 1");
  for (const auto& c : f) {
    require_same_ring(m.ring, c.ring(), "IcisMap::make");
    auto w = homogeneous_weight(c, v);
    if (!w || *w <= 0) throw Error(ErrorCode::Internal, "component " + to_string(c) + " is not weighted-homogeneous");
    m.p.push_back(*w);
  }
  m.f = std::move(f);
  m.v = std::move(v);
  m.power = power;
  return m;
}

std::vector<MultiPoly> jacobian_maximal_minors(const IcisMap& map) {
  const std::size_t K = map.K(), n = map.ring.size();
  PolyMatrix jac(map.ring, K, n);
  for (std::size_t l = 0; l < K; ++l)
    for (std::size_t j = 0; j < n; ++j) jac(l, j) = map.f[l].derivative(j);
  std::vector<MultiPoly> out;
  std::vector<std::size_t> cols(K);
  std::iota(cols.begin(), cols.end(), 0);
  for (;;) {
    PolyMatrix sub(map.ring, K, K);
    bool zero_col = false;
    for (std::size_t c = 0; c < K; ++c) {
      bool any = false;
      for (std::size_t r = 0; r < K; ++r) {
        sub(r, c) = jac(r, cols[c]);
        any = any || !sub(r, c).is_zero();
      }
      zero_col = zero_col || !any;
    }
    if (!zero_col) {
      MultiPoly d = det_bareiss(sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
    // Next K-subset in lexicographic order.
    std::size_t i = K;
    while (i > 0 && cols[i - 1] == n - K + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < K; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

std::vector<MultiPoly> phi_ideal_generators(const IcisMap& map) {
  auto gens = jacobian_maximal_minors(map);
  gens.insert(gens.end(), map.f.begin(), map.f.end());
  return gens;
}

Staircase isolated_staircase(const IcisMap& map, const GroebnerLimits& limits) {
  auto gb = groebner(phi_ideal_generators(map), MonomialOrder::grevlex(), limits);
  auto st = standard_monomials(gb);
  if (!st.finite)
    throw Error(ErrorCode::NotIsolated,
                "quotient is infinite-dimensional: every power of " + map.ring.name(*st.ray) + " is standard");
  return st;
}

}  // namespace leray
