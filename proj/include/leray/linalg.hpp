#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leray/rational.hpp"

namespace leray {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const RationalMatrix& o) const = default;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  RationalMatrix scaled(const Rational& c) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;
};

// Solves A x = b exactly. Elimination is fraction-free on the integerised
// augmented matrix; back substitution is rational. Free variables of the
// particular solution are zero. nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear_exact(const RationalMatrix& a, std::span<const Rational> b);

std::size_t rank(const RationalMatrix& a);
Rational determinant(const RationalMatrix& a);
// nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

// Characteristic polynomial det(x I - A), coefficients ascending (monic).
std::vector<Rational> characteristic_polynomial(const RationalMatrix& a);

// Rational roots of an integer-or-rational univariate polynomial (ascending
// coefficients), with multiplicity, sorted ascending. Returns nullopt if some
// root is not rational.
std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> coeffs);

// ------------------------------------------------------------------ sparse

// Sparse vector over Q with strictly increasing indices and no zero entries.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

// Incrementally built semi-echelon basis of a subspace of Q^dim. Each stored
// row has pivot 1 at its smallest index. Rows may carry a "tag" vector that
// records the row as a combination of the inserted generators, which lets
// callers recover coefficients of a membership certificate.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t dim, bool track = false);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool tracking() const { return track_; }

  // Inserts v; returns true iff it was independent of the current span.
  // With tracking, `tag` identifies v in generator coordinates.
  bool insert(const SparseVec& v, const SparseVec& tag = {});
  // Insert without tracking, generator index `gen` recorded as unit tag.
  bool insert_generator(const SparseVec& v, std::uint32_t gen);

  struct Reduced {
    SparseVec remainder;
    SparseVec combination;  // v - remainder = sum combination[g] * generator_g
  };
  // Full reduction by all pivots; remainder has no entry on a pivot column.
  Reduced reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).remainder.empty(); }

 private:
  struct Row {
    SparseVec entries;
    SparseVec tag;
  };
  std::size_t dim_;
  bool track_;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_row_;  // by column, -1 if none; grows on demand
};

SparseVec sparse_axpy(const SparseVec& x, const Rational& a, const SparseVec& y);  // x + a*y

}  // namespace leray
