#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leray/poly.hpp"

namespace leray {

class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  // Variables [0, split) form the first block; both blocks use grevlex.
  static MonomialOrder elimination(std::size_t split) { return MonomialOrder(Kind::Elimination, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder& o) const = default;

 private:
  MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}
  Kind kind_;
  std::size_t split_;
};

struct GroebnerLimits {
  std::size_t max_pairs = 100000;
  int max_degree = 60;
};

// Reduced, monic Groebner basis. Generators are sorted by ascending leading
// monomial under the order.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<MultiPoly> gens, std::vector<Monomial> leads);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  bool is_unit() const;

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<MultiPoly> gens_;
  std::vector<Monomial> leads_;
};

// Leading monomial of a nonzero p under the order.
Monomial leading_monomial(const MultiPoly& p, const MonomialOrder& order);

GroebnerBasis groebner(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                       const GroebnerLimits& limits = {});

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

struct Staircase {
  bool finite = false;
  std::vector<Monomial> monomials;  // ascending under the basis order, when finite
  std::optional<std::size_t> ray;   // variable whose pure powers are all standard
};

Staircase standard_monomials(const GroebnerBasis& gb);

// Generators of the elimination ideal, expressed in the ring of the
// variables that were kept.
std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::vector<std::string>& drop,
                                 const GroebnerLimits& limits = {});

}  // namespace leray
