#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leray/poly.hpp"

namespace leray {

// Index subset {i1 < ... < ik} of the ambient variables, as a bit mask.
using FormIndex = std::uint64_t;

int index_degree(FormIndex s);
std::vector<std::size_t> index_list(FormIndex s);
FormIndex index_from_list(std::span<const std::size_t> idx);

// Sign of du_a ^ du_b relative to du_{a|b}; 0 when a and b overlap.
int wedge_sign(FormIndex a, FormIndex b);

// Euler vector field sum v_i u_i d/du_i with positive, primitive weights.
class EulerField {
 public:
  explicit EulerField(std::vector<int> weights);
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  int index_weight(FormIndex s) const;

 private:
  std::vector<int> weights_;
};

// Differential k-form with polynomial coefficients on the ring's variables.
// Components are kept sorted by index mask; zero components are never stored.
class DiffForm {
 public:
  DiffForm(Ring ring, int degree);

  static DiffForm function(const MultiPoly& f);                 // 0-form
  static DiffForm basis(const MultiPoly& coeff, FormIndex idx);  // coeff * du_idx
  static DiffForm differential(const Ring& ring, std::size_t i);  // du_i
  static DiffForm exact(const MultiPoly& f);                    // df

  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }
  const std::vector<std::pair<FormIndex, MultiPoly>>& components() const { return comps_; }
  MultiPoly component(FormIndex idx) const;

  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  DiffForm operator-() const;
  DiffForm scaled(const MultiPoly& f) const;
  DiffForm scaled(const Rational& c) const;
  bool operator==(const DiffForm& o) const;
  bool operator!=(const DiffForm& o) const { return !(*this == o); }

  // Weight of a weighted-homogeneous form, nullopt if mixed or zero.
  std::optional<int> weight(const EulerField& e) const;

  // Same form with coefficients re-expressed in `target` (by variable name);
  // form indices are remapped through `index_map` (old var -> new var).
  DiffForm embed(const Ring& target, std::span<const std::size_t> index_map) const;

 private:
  void add_component(FormIndex idx, MultiPoly p);
  Ring ring_;
  int degree_;
  std::vector<std::pair<FormIndex, MultiPoly>> comps_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_d(const DiffForm& a);
DiffForm contract_euler(const DiffForm& a, const EulerField& e);

}  // namespace leray
