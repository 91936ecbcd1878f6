#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leray/rational.hpp"

namespace leray {

// Ordered list of variable names shared by every polynomial of a ring.
// Rings compare by content; copies share storage.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Exponent vector, one entry per ring variable.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
int monomial_weight(const Monomial& m, std::span<const int> weights);

// Graded reverse lexicographic comparison: <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial exp;
  Rational coef;
};

// Exact sparse multivariate polynomial over Q. Terms are kept sorted by
// descending grevlex so that structural equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(const Ring& ring, const Rational& c);
  static MultiPoly variable(const Ring& ring, std::size_t i);
  static MultiPoly variable(const Ring& ring, std::string_view name);
  static MultiPoly monomial(const Ring& ring, Monomial exp, const Rational& c = 1);
  static MultiPoly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& exp) const;
  // Highest term under grevlex. Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }

  int degree() const;
  int degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly mul_monomial(const Monomial& exp, const Rational& c) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;
  // Sum of |c| * |x^a| over all terms; the natural scale for relative residuals.
  double evaluate_abs(std::span<const double> point) const;

  // Re-express in a ring that contains all variables used by this polynomial
  // (matched by name).
  MultiPoly in_ring(const Ring& target) const;

 private:
  void canonicalize();

  Ring ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Ring& a, const Ring& b, const char* where);

// Ring homomorphism defined on the variables named in `bindings`. Every image
// must live in one target ring; variables of `p` without a binding map to
// themselves and are appended to the target ring. An unbound variable whose
// name already occurs in the target ring is rejected as a collision.
MultiPoly poly_substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);

// Same as poly_substitute but into an explicitly given ring; bindings may be
// empty and every unbound variable must exist in `target` by name.
MultiPoly poly_substitute_into(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings,
                               const Ring& target);

struct GradedPart {
  int weight;
  MultiPoly part;
};

// Splits p into weighted-homogeneous pieces, ascending weight.
std::vector<GradedPart> weighted_graded_parts(const MultiPoly& p, std::span<const int> weights);

// Weight of p if it is weighted-homogeneous (the zero polynomial has none).
std::optional<int> homogeneous_weight(const MultiPoly& p, std::span<const int> weights);

// Exact division; nullopt when b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Scales to integer coefficients with gcd 1 and positive leading coefficient.
MultiPoly primitive_normalize(const MultiPoly& p);

// Human-readable form, e.g. "2*x1^2 - 3/2*x2 + 1". Re-parses to the same value.
std::string to_string(const MultiPoly& p);

}  // namespace leray
