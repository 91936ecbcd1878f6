#pragma once

#include <random>
#include <vector>

#include "leray/parse.hpp"
#include "leray/poly.hpp"
#include "leray/polymatrix.hpp"

namespace testutil {

using namespace leray;

inline MultiPoly P(const Ring& r, const char* text) { return parse_poly(text, r); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline MultiPoly random_poly(std::mt19937_64& rng, const Ring& r, int max_deg, int terms) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial e(r.size());
    for (auto& x : e) x = static_cast<int>(uniform(rng, 0, max_deg));
    ts.push_back({e, make_rational(uniform(rng, -9, 9), uniform(rng, 1, 4))});
  }
  return MultiPoly::from_terms(r, ts);
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, const Ring& r, std::size_t n, int max_deg, int terms) {
  PolyMatrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, r, max_deg, terms);
  return m;
}

}  // namespace testutil
