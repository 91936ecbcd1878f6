#include "leray/exterior.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "leray/errors.hpp"

namespace leray {

int index_degree(FormIndex s) { return std::popcount(s); }

std::vector<std::size_t> index_list(FormIndex s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

FormIndex index_from_list(std::span<const std::size_t> idx) {
  FormIndex s = 0;
  for (auto i : idx) s |= FormIndex{1} << i;
  return s;
}

int wedge_sign(FormIndex a, FormIndex b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (FormIndex bb = b; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    FormIndex above = j >= 63 ? 0 : (~FormIndex{0} << (j + 1));
    inversions += std::popcount(a & above);
  }
  return (inversions & 1) ? -1 : 1;
}

EulerField::EulerField(std::vector<int> weights) : weights_(std::move(weights)) {
  int g = 0;
  for (int w : weights_) {
    if (w <= 0) throw Error(ErrorCode::Internal, "Euler field weights must be positive");
    g = std::gcd(g, w);
  }
  if (!weights_.empty() && g != 1) throw Error(ErrorCode::Internal, "Euler field weights must have gcd 1");
}

int EulerField::index_weight(FormIndex s) const {
  int w = 0;
  for (auto i : index_list(s)) w += weights_.at(i);
  return w;
}

DiffForm::DiffForm(Ring ring, int degree) : ring_(std::move(ring)), degree_(degree) {
  if (ring_.size() > 64) throw Error(ErrorCode::Internal, "forms support at most 64 variables");
  if (degree < 0) throw Error(ErrorCode::Internal, "negative form degree");
}

DiffForm DiffForm::function(const MultiPoly& f) { return basis(f, 0); }

DiffForm DiffForm::basis(const MultiPoly& coeff, FormIndex idx) {
  DiffForm d(coeff.ring(), index_degree(idx));
  if (!coeff.is_zero()) d.comps_.emplace_back(idx, coeff);
  return d;
}

DiffForm DiffForm::differential(const Ring& ring, std::size_t i) {
  return basis(MultiPoly::constant(ring, 1), FormIndex{1} << i);
}

DiffForm DiffForm::exact(const MultiPoly& f) { return exterior_d(function(f)); }

MultiPoly DiffForm::component(FormIndex idx) const {
  auto it = std::lower_bound(comps_.begin(), comps_.end(), idx,
                             [](const auto& c, FormIndex i) { return c.first < i; });
  if (it != comps_.end() && it->first == idx) return it->second;
  return MultiPoly(ring_);
}

void DiffForm::add_component(FormIndex idx, MultiPoly p) {
  if (p.is_zero()) return;
  auto it = std::lower_bound(comps_.begin(), comps_.end(), idx,
                             [](const auto& c, FormIndex i) { return c.first < i; });
  if (it != comps_.end() && it->first == idx) {
    it->second += p;
    if (it->second.is_zero()) comps_.erase(it);
  } else {
    comps_.insert(it, {idx, std::move(p)});
  }
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  require_same_ring(ring_, o.ring_, "DiffForm::operator+");
  if (degree_ != o.degree_) throw Error(ErrorCode::Internal, "adding forms of different degree");
  for (const auto& [idx, p] : o.comps_) add_component(idx, p);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) { return *this += -o; }

DiffForm DiffForm::operator-() const {
  DiffForm r = *this;
  for (auto& c : r.comps_) c.second = -c.second;
  return r;
}

DiffForm DiffForm::scaled(const MultiPoly& f) const {
  require_same_ring(ring_, f.ring(), "DiffForm::scaled");
  DiffForm r(ring_, degree_);
  for (const auto& [idx, p] : comps_) r.add_component(idx, p * f);
  return r;
}

DiffForm DiffForm::scaled(const Rational& c) const {
  DiffForm r(ring_, degree_);
  if (c == 0) return r;
  r.comps_ = comps_;
  for (auto& comp : r.comps_) comp.second *= c;
  return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
  if (ring_ != o.ring_ || degree_ != o.degree_ || comps_.size() != o.comps_.size()) return false;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i].first != o.comps_[i].first || comps_[i].second != o.comps_[i].second) return false;
  return true;
}

std::optional<int> DiffForm::weight(const EulerField& e) const {
  if (comps_.empty()) return std::nullopt;
  std::optional<int> w;
  for (const auto& [idx, p] : comps_) {
    auto pw = homogeneous_weight(p, e.weights());
    if (!pw) return std::nullopt;
    int total = *pw + e.index_weight(idx);
    if (w && *w != total) return std::nullopt;
    w = total;
  }
  return w;
}

DiffForm DiffForm::embed(const Ring& target, std::span<const std::size_t> index_map) const {
  DiffForm r(target, degree_);
  for (const auto& [idx, p] : comps_) {
    FormIndex ni = 0;
    int sign = 1;
    // Remapping may reorder indices; accumulate the permutation sign by
    // wedging the images one by one.
    for (auto i : index_list(idx)) {
      FormIndex bit = FormIndex{1} << index_map[i];
      sign *= wedge_sign(ni, bit);
      ni |= bit;
    }
    MultiPoly q = p.in_ring(target);
    r.add_component(ni, sign > 0 ? q : -q);
  }
  return r;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  require_same_ring(a.ring(), b.ring(), "wedge");
  DiffForm r(a.ring(), a.degree() + b.degree());
  if (a.degree() + b.degree() > static_cast<int>(a.ring().size())) return r;
  std::map<FormIndex, std::vector<Term>> acc;
  for (const auto& [ia, pa] : a.components())
    for (const auto& [ib, pb] : b.components()) {
      int s = wedge_sign(ia, ib);
      if (s == 0) continue;
      MultiPoly prod = pa * pb;
      auto& bucket = acc[ia | ib];
      for (const auto& t : prod.terms()) bucket.push_back({t.exp, s > 0 ? t.coef : Rational(-t.coef)});
    }
  for (auto& [idx, terms] : acc) r += DiffForm::basis(MultiPoly::from_terms(a.ring(), std::move(terms)), idx);
  return r;
}

DiffForm exterior_d(const DiffForm& a) {
  const std::size_t n = a.ring().size();
  DiffForm r(a.ring(), a.degree() + 1);
  if (a.degree() >= static_cast<int>(n)) return r;
  std::map<FormIndex, std::vector<Term>> acc;
  for (const auto& [idx, p] : a.components())
    for (std::size_t j = 0; j < n; ++j) {
      FormIndex bit = FormIndex{1} << j;
      int s = wedge_sign(bit, idx);
      if (s == 0) continue;
      MultiPoly dp = p.derivative(j);
      auto& bucket = acc[idx | bit];
      for (const auto& t : dp.terms()) bucket.push_back({t.exp, s > 0 ? t.coef : Rational(-t.coef)});
    }
  for (auto& [idx, terms] : acc) r += DiffForm::basis(MultiPoly::from_terms(a.ring(), std::move(terms)), idx);
  return r;
}

DiffForm contract_euler(const DiffForm& a, const EulerField& e) {
  const Ring& ring = a.ring();
  if (e.weights().size() != ring.size()) throw Error(ErrorCode::Internal, "Euler field arity mismatch");
  if (a.degree() == 0) return DiffForm(ring, 0);
  DiffForm r(ring, a.degree() - 1);
  std::map<FormIndex, std::vector<Term>> acc;
  for (const auto& [idx, p] : a.components()) {
    auto list = index_list(idx);
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
      std::size_t i = list[pos];
      Rational c = (pos % 2 == 0 ? 1 : -1) * e.weight(i);
      Monomial shift(ring.size(), 0);
      shift[i] = 1;
      MultiPoly q = p.mul_monomial(shift, c);
      auto& bucket = acc[idx & ~(FormIndex{1} << i)];
      bucket.insert(bucket.end(), q.terms().begin(), q.terms().end());
    }
  }
  for (auto& [idx, terms] : acc) r += DiffForm::basis(MultiPoly::from_terms(ring, std::move(terms)), idx);
  return r;
}

}  // namespace leray
