#include "leray/univariate.hpp"

#include "leray/errors.hpp"

namespace leray {

void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  upoly_trim(d);
  return d;
}

UPoly upoly_rem(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw Error(ErrorCode::Internal, "polynomial division by zero");
  UPoly r = a;
  upoly_trim(r);
  while (r.size() >= b.size()) {
    Rational c = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    upoly_trim(r);
  }
  return r;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

Rational upoly_eval(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

namespace {

// Sign changes at +inf (at_plus) or -inf, read off leading coefficients.
int variations_at_infinity(const std::vector<UPoly>& seq, bool at_plus) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    if (p.empty()) continue;
    int s = sgn(p.back());
    if (!at_plus && (p.size() - 1) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_distinct_real_roots(const UPoly& p0) {
  UPoly p = p0;
  upoly_trim(p);
  if (p.empty()) throw Error(ErrorCode::Internal, "Sturm sequence of the zero polynomial");
  std::vector<UPoly> seq{p, upoly_derivative(p)};
  while (!seq.back().empty()) {
    UPoly r = upoly_rem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

}  // namespace leray
