#include "leray/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "leray/errors.hpp"

namespace leray {

// ---------------------------------------------------------------- rationals

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::SyntaxError, "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) throw bad();
  Integer n(num), d(den);
  if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// --------------------------------------------------------------------- ring

namespace {
const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto e = std::make_shared<const std::vector<std::string>>();
  return e;
}
}  // namespace

Ring::Ring() : names_(empty_names()) {}

Ring::Ring(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i)
    for (std::size_t j = i + 1; j < names_->size(); ++j)
      if ((*names_)[i] == (*names_)[j])
        throw Error(ErrorCode::Internal, "duplicate variable name '" + (*names_)[i] + "'");
}

std::optional<std::size_t> Ring::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

bool Ring::operator==(const Ring& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (a != b) throw RingMismatch(std::string("ring mismatch in ") + where);
}

// ---------------------------------------------------------------- monomials

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

int monomial_weight(const Monomial& m, std::span<const int> weights) {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * weights[i];
  return w;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------- MultiPoly

namespace {
bool term_before(const Term& a, const Term& b) { return grevlex_compare(a.exp, b.exp) > 0; }
}  // namespace

void MultiPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(const Ring& ring, const Rational& c) {
  MultiPoly p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring.size(), 0), c});
  return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, std::size_t i) {
  Monomial m(ring.size(), 0);
  m.at(i) = 1;
  return monomial(ring, std::move(m));
}

MultiPoly MultiPoly::variable(const Ring& ring, std::string_view name) {
  auto i = ring.index(name);
  if (!i) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  return variable(ring, *i);
}

MultiPoly MultiPoly::monomial(const Ring& ring, Monomial exp, const Rational& c) {
  if (exp.size() != ring.size()) throw Error(ErrorCode::Internal, "monomial length mismatch");
  MultiPoly p(ring);
  if (c != 0) p.terms_.push_back({std::move(exp), c});
  return p;
}

MultiPoly MultiPoly::from_terms(const Ring& ring, std::vector<Term> terms) {
  MultiPoly p(ring);
  for (const auto& t : terms)
    if (t.exp.size() != ring.size()) throw Error(ErrorCode::Internal, "monomial length mismatch");
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && total_degree(terms_.back().exp) == 0) return terms_.back().coef;
  return 0;
}

Rational MultiPoly::coefficient(const Monomial& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, const Monomial& e) {
    return grevlex_compare(t.exp, e) > 0;
  });
  if (it != terms_.end() && it->exp == exp) return it->coef;
  return 0;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.exp));
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

bool MultiPoly::uses_variable(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.exp[var] != 0) return true;
  return false;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_compare(a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].exp, s});
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(ring_, o.ring_, "operator+");
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(ring_, o.ring_, "operator-");
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring_, b.ring_, "operator*");
  MultiPoly r(a.ring_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  const std::size_t n = a.ring_.size();
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial m(n);
      for (std::size_t k = 0; k < n; ++k) m[k] = s.exp[k] + t.exp[k];
      r.terms_.push_back({std::move(m), s.coef * t.coef});
    }
  }
  r.canonicalize();
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(ring_);
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term d{t.exp, t.coef * t.exp[var]};
    d.exp[var] -= 1;
    r.terms_.push_back(std::move(d));
  }
  // Lowering one exponent keeps distinct monomials distinct but may break grevlex order.
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& exp, const Rational& c) const {
  MultiPoly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.exp;
    for (std::size_t k = 0; k < m.size(); ++k) m[k] += exp[k];
    r.terms_.push_back({std::move(m), t.coef * c});
  }
  // Multiplication by a monomial preserves grevlex order.
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_.size()) throw Error(ErrorCode::Internal, "evaluation point has wrong arity");
  std::vector<std::vector<Rational>> powers(ring_.size());
  for (std::size_t k = 0; k < ring_.size(); ++k) {
    int d = degree_in(k);
    powers[k].resize(std::max(d, 0) + 1);
    powers[k][0] = 1;
    for (int e = 1; e <= d; ++e) powers[k][e] = powers[k][e - 1] * point[k];
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t k = 0; k < ring_.size(); ++k)
      if (t.exp[k]) v *= powers[k][t.exp[k]];
    sum += v;
  }
  return sum;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() != ring_.size()) throw Error(ErrorCode::Internal, "evaluation point has wrong arity");
  double sum = 0;
  for (const auto& t : terms_) {
    double v = t.coef.get_d();
    for (std::size_t k = 0; k < ring_.size(); ++k)
      if (t.exp[k]) v *= std::pow(point[k], t.exp[k]);
    sum += v;
  }
  return sum;
}

double MultiPoly::evaluate_abs(std::span<const double> point) const {
  double sum = 0;
  for (const auto& t : terms_) {
    double v = std::fabs(t.coef.get_d());
    for (std::size_t k = 0; k < ring_.size(); ++k)
      if (t.exp[k]) v *= std::pow(std::fabs(point[k]), t.exp[k]);
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::in_ring(const Ring& target) const {
  if (target == ring_) return *this;
  std::vector<std::optional<std::size_t>> map(ring_.size());
  for (std::size_t k = 0; k < ring_.size(); ++k) map[k] = target.index(ring_.name(k));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.size(), 0);
    for (std::size_t k = 0; k < ring_.size(); ++k) {
      if (t.exp[k] == 0) continue;
      if (!map[k])
        throw RingMismatch("variable '" + ring_.name(k) + "' is missing from the target ring");
      m[*map[k]] = t.exp[k];
    }
    out.push_back({std::move(m), t.coef});
  }
  return from_terms(target, std::move(out));
}

// ------------------------------------------------------------- substitution

namespace {

MultiPoly substitute_impl(const MultiPoly& p, const std::vector<const MultiPoly*>& images,
                          const Ring& target) {
  const Ring& src = p.ring();
  std::vector<std::vector<MultiPoly>> powers(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    int d = p.degree_in(k);
    powers[k].push_back(MultiPoly::constant(target, 1));
    for (int e = 1; e <= d; ++e) powers[k].push_back(powers[k].back() * *images[k]);
  }
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    MultiPoly v = MultiPoly::constant(target, t.coef);
    for (std::size_t k = 0; k < src.size(); ++k)
      if (t.exp[k]) v *= powers[k][t.exp[k]];
    acc.insert(acc.end(), v.terms().begin(), v.terms().end());
  }
  return MultiPoly::from_terms(target, std::move(acc));
}

}  // namespace

MultiPoly poly_substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
  const Ring& src = p.ring();
  if (bindings.empty()) return p;
  std::optional<Ring> image_ring;
  for (const auto& [name, img] : bindings) {
    if (!src.index(name))
      throw Error(ErrorCode::UnknownVariable, "binding for '" + name + "' which is not in the ring");
    if (image_ring && *image_ring != img.ring())
      throw RingMismatch("substitution images live in different rings");
    image_ring = img.ring();
  }
  std::vector<std::string> names = image_ring->names();
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (bindings.count(src.name(k))) continue;
    if (image_ring->index(src.name(k)))
      throw Error(ErrorCode::Internal,
                  "variable '" + src.name(k) + "' is unbound but collides with a target variable");
    names.push_back(src.name(k));
  }
  Ring target = names.size() == image_ring->size() ? *image_ring : Ring(names);
  std::map<std::string, MultiPoly> lifted;
  for (const auto& [name, img] : bindings) lifted.emplace(name, img.in_ring(target));
  return poly_substitute_into(p, lifted, target);
}

MultiPoly poly_substitute_into(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings,
                               const Ring& target) {
  const Ring& src = p.ring();
  std::vector<MultiPoly> identity;
  identity.reserve(src.size());
  std::vector<const MultiPoly*> images(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    auto it = bindings.find(src.name(k));
    if (it != bindings.end()) {
      require_same_ring(it->second.ring(), target, "poly_substitute_into");
      images[k] = &it->second;
    }
  }
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (images[k]) continue;
    if (!p.uses_variable(k)) {
      identity.push_back(MultiPoly(target));
    } else {
      auto idx = target.index(src.name(k));
      if (!idx) throw RingMismatch("unbound variable '" + src.name(k) + "' missing from target ring");
      identity.push_back(MultiPoly::variable(target, *idx));
    }
  }
  std::size_t next = 0;
  for (std::size_t k = 0; k < src.size(); ++k)
    if (!images[k]) images[k] = &identity[next++];
  return substitute_impl(p, images, target);
}

// ------------------------------------------------------------------ grading

std::vector<GradedPart> weighted_graded_parts(const MultiPoly& p, std::span<const int> weights) {
  if (weights.size() != p.ring().size()) throw Error(ErrorCode::Internal, "weight vector arity mismatch");
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) buckets[monomial_weight(t.exp, weights)].push_back(t);
  std::vector<GradedPart> out;
  for (auto& [w, ts] : buckets) out.push_back({w, MultiPoly::from_terms(p.ring(), std::move(ts))});
  return out;
}

std::optional<int> homogeneous_weight(const MultiPoly& p, std::span<const int> weights) {
  if (p.is_zero()) return std::nullopt;
  int w = monomial_weight(p.terms().front().exp, weights);
  for (const auto& t : p.terms())
    if (monomial_weight(t.exp, weights) != w) return std::nullopt;
  return w;
}

// ----------------------------------------------------------------- division

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring(), b.ring(), "divide_exact");
  if (b.is_zero()) throw Error(ErrorCode::Internal, "division by zero polynomial");
  MultiPoly rem = a;
  std::vector<Term> quot;
  const Term& lb = b.leading_term();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!divides(lb.exp, lr.exp)) return std::nullopt;
    Monomial m(lr.exp.size());
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = lr.exp[k] - lb.exp[k];
    Rational c = lr.coef / lb.coef;
    rem -= b.mul_monomial(m, c);
    quot.push_back({std::move(m), c});
  }
  return MultiPoly::from_terms(a.ring(), std::move(quot));
}

MultiPoly primitive_normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_term().coef < 0) scale = -scale;
  return p * scale;
}

// ------------------------------------------------------------------ printing

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = total_degree(t.exp) > 0;
    bool wrote = false;
    if (!has_var || c != 1) {
      os << to_short_string(c);
      wrote = true;
    }
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (!t.exp[k]) continue;
      if (wrote) os << "*";
      os << p.ring().name(k);
      if (t.exp[k] > 1) os << "^" << t.exp[k];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace leray
