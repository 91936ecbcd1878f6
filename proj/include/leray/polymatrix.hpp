#pragma once

#include <vector>

#include "leray/linalg.hpp"
#include "leray/poly.hpp"

namespace leray {

// Dense matrix of polynomials from one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(const Ring& ring, std::size_t n);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const PolyMatrix& o) const;

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const MultiPoly& f) const;

  RationalMatrix evaluate(std::span<const Rational> point) const;
  PolyMatrix derivative(std::size_t var) const;
  // Entry-wise substitution; see poly_substitute_into.
  PolyMatrix substitute(const std::map<std::string, MultiPoly>& bindings, const Ring& target) const;

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<MultiPoly> data_;
};

enum class DetStrategy { Bareiss, Interpolate };

const char* det_strategy_name(DetStrategy s);

// Per-variable degree bound for det(m): the heaviest permutation of entry
// degrees in that variable. Never above the row or column degree sums.
std::vector<int> det_degree_bounds(const PolyMatrix& m);
int det_total_degree_bound(const PolyMatrix& m);

MultiPoly det_poly_matrix(const PolyMatrix& m, DetStrategy strategy);

MultiPoly det_bareiss(const PolyMatrix& m);

namespace kernels {

// Exact determinant interpolation on a box or simplex of non-negative integer
// nodes, whichever is smaller.
// The serial version is the reference; the parallel one evaluates grid points
// with OpenMP and must produce identical output.
MultiPoly det_interpolate_serial(const PolyMatrix& m);
MultiPoly det_interpolate_parallel(const PolyMatrix& m);

}  // namespace kernels

}  // namespace leray
