#include "leray/polymatrix.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "leray/errors.hpp"

namespace leray {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(ring_)) {}

PolyMatrix PolyMatrix::identity(const Ring& ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly::constant(ring, 1);
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::Internal, "PolyMatrix sum shape mismatch");
  PolyMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::Internal, "PolyMatrix difference shape mismatch");
  PolyMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::Internal, "PolyMatrix product shape mismatch");
  PolyMatrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
  return r;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& f) const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = p * f;
  return r;
}

RationalMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).evaluate(point);
  return r;
}

PolyMatrix PolyMatrix::derivative(std::size_t var) const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = p.derivative(var);
  return r;
}

PolyMatrix PolyMatrix::substitute(const std::map<std::string, MultiPoly>& bindings, const Ring& target) const {
  PolyMatrix r(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = poly_substitute_into(data_[i], bindings, target);
  return r;
}

const char* det_strategy_name(DetStrategy s) { return s == DetStrategy::Bareiss ? "bareiss" : "interp"; }

namespace {

// Maximum of sum_i deg(i, sigma(i)) over permutations avoiding zero entries
// (Hungarian method on negated degrees). -1 when no such permutation exists.
int max_assignment(const std::vector<std::vector<int>>& deg) {
  const int n = static_cast<int>(deg.size());
  const long long forbid = 1'000'000;
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(n + 1), v(n + 1);
  std::vector<int> p(n + 1), way(n + 1);
  auto cost = [&](int i, int j) { return deg[i - 1][j - 1] < 0 ? forbid : -static_cast<long long>(deg[i - 1][j - 1]); };
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      long long delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        long long cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  long long total = 0;
  for (int j = 1; j <= n; ++j) {
    int d = deg[p[j] - 1][j - 1];
    if (d < 0) return -1;
    total += d;
  }
  return static_cast<int>(total);
}

}  // namespace

std::vector<int> det_degree_bounds(const PolyMatrix& m) {
  const std::size_t nv = m.ring().size(), n = m.rows();
  std::vector<int> bounds(nv, 0);
  std::vector<std::vector<int>> deg(n, std::vector<int>(n));
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) deg[i][j] = m(i, j).is_zero() ? -1 : m(i, j).degree_in(v);
    bounds[v] = std::max(0, max_assignment(deg));
  }
  return bounds;
}

int det_total_degree_bound(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<int>> deg(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) deg[i][j] = m(i, j).is_zero() ? -1 : m(i, j).degree();
  return std::max(0, max_assignment(deg));
}

MultiPoly det_bareiss(const PolyMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::Internal, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  const Ring& ring = input.ring();
  if (n == 0) return MultiPoly::constant(ring, 1);
  PolyMatrix m = input;
  MultiPoly prev = MultiPoly::constant(ring, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Prefer the sparsest nonzero pivot to limit intermediate growth.
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      if (best == n || m(r, k).size() < m(best, k).size()) best = r;
    }
    if (best == n) return MultiPoly(ring);
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(best, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto q = divide_exact(v, prev);
        if (!q) throw Error(ErrorCode::Internal, "Bareiss step was not an exact division");
        m(i, j) = std::move(*q);
      }
      m(i, k) = MultiPoly(ring);
    }
    prev = m(k, k);
  }
  MultiPoly d = m(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

namespace kernels {

namespace {

// Interpolation nodes: either the box 0..bound[v] per variable or the simplex
// {a >= 0 : |a| <= D}. Both are unisolvent for their degree class; the kernel
// takes whichever has fewer points.
struct Grid {
  std::vector<Monomial> points;
  std::vector<int> bounds;  // box
  int total_degree = -1;    // simplex when >= 0
};

constexpr std::size_t kMaxGridPoints = 200'000'000;

std::size_t simplex_size(std::size_t vars, int d) {
  // C(d + vars, vars), saturating.
  long double c = 1;
  for (std::size_t i = 1; i <= vars; ++i) c = c * (d + static_cast<long double>(i)) / static_cast<long double>(i);
  return c > kMaxGridPoints ? kMaxGridPoints + 1 : static_cast<std::size_t>(c + 0.5L);
}

void enumerate_simplex(std::size_t vars, int d, Monomial& cur, std::size_t pos, std::vector<Monomial>& out) {
  if (pos == vars) {
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= d; ++a) {
    cur[pos] = a;
    enumerate_simplex(vars, d - a, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

void enumerate_box(const std::vector<int>& bounds, Monomial& cur, std::size_t pos, std::vector<Monomial>& out) {
  if (pos == bounds.size()) {
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= bounds[pos]; ++a) {
    cur[pos] = a;
    enumerate_box(bounds, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

Grid make_grid(const PolyMatrix& m) {
  Grid g;
  const std::size_t nv = m.ring().size();
  g.bounds = det_degree_bounds(m);
  long double box = 1;
  for (int b : g.bounds) box *= b + 1;
  const int d = det_total_degree_bound(m);
  const std::size_t simplex = simplex_size(nv, d);
  Monomial cur(nv, 0);
  if (static_cast<long double>(simplex) < box) {
    if (simplex > kMaxGridPoints) throw Error(ErrorCode::ResourceLimit, "determinant interpolation grid exceeds 2e8 points");
    g.total_degree = d;
    g.points.reserve(simplex);
    enumerate_simplex(nv, d, cur, 0, g.points);
  } else {
    if (box > kMaxGridPoints) throw Error(ErrorCode::ResourceLimit, "determinant interpolation grid exceeds 2e8 points");
    g.points.reserve(static_cast<std::size_t>(box));
    enumerate_box(g.bounds, cur, 0, g.points);
  }
  return g;
}

Rational value_at(const PolyMatrix& m, const Monomial& node) {
  std::vector<Rational> point(node.begin(), node.end());
  return determinant(m.evaluate(point));
}

// Newton divided differences on nodes 0..n-1, in place.
void divided_differences(std::vector<Rational>& y) {
  const std::size_t n = y.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      y[i] = (y[i] - y[i - 1]) / Rational(static_cast<long>(k));
      if (i == k) break;
    }
}

// Monomial coefficients of the Newton basis prod_{i<j} (x - i), j < n.
std::vector<std::vector<Rational>> newton_basis(std::size_t n) {
  std::vector<std::vector<Rational>> basis(n);
  std::vector<Rational> cur{1};
  for (std::size_t j = 0; j < n; ++j) {
    basis[j] = cur;
    std::vector<Rational> next(cur.size() + 1);
    for (std::size_t r = 0; r < cur.size(); ++r) {
      next[r + 1] += cur[r];
      next[r] -= cur[r] * Rational(static_cast<long>(j));
    }
    cur = std::move(next);
  }
  return basis;
}

using Values = std::map<Monomial, Rational>;

// Reconstructs the polynomial whose values on the nodes are `vals`. Each
// variable in turn is peeled off: along every line in the first coordinate
// the Newton coefficients c_j are polynomials in the remaining variables,
// known on the sub-grid that remains after dropping j nodes.
Values reconstruct(const Values& vals, std::size_t vars, const Grid& g, std::size_t depth, int budget) {
  if (depth == vars) return vals;
  const int len_max = g.total_degree >= 0 ? budget : g.bounds[depth];
  std::map<Monomial, std::vector<Rational>> lines;
  for (const auto& [pt, v] : vals) {
    Monomial rest(pt.begin() + 1, pt.end());
    auto& line = lines[rest];
    if (line.size() <= static_cast<std::size_t>(pt[0])) line.resize(pt[0] + 1);
    line[pt[0]] = v;
  }
  std::vector<Values> coeff(len_max + 1);
  for (auto& [rest, line] : lines) {
    divided_differences(line);
    for (std::size_t j = 0; j < line.size(); ++j) coeff[j][rest] = line[j];
  }
  auto basis = newton_basis(len_max + 1);
  Values out;
  for (int j = 0; j <= len_max; ++j) {
    if (coeff[j].empty()) continue;
    Values sub = reconstruct(coeff[j], vars, g, depth + 1, budget - j);
    for (const auto& [beta, c] : sub) {
      if (c == 0) continue;
      for (std::size_t r = 0; r < basis[j].size(); ++r) {
        if (basis[j][r] == 0) continue;
        Monomial e;
        e.reserve(beta.size() + 1);
        e.push_back(static_cast<int>(r));
        e.insert(e.end(), beta.begin(), beta.end());
        out[e] += basis[j][r] * c;
      }
    }
  }
  return out;
}

MultiPoly assemble(const PolyMatrix& m, const Grid& g, const std::vector<Rational>& values) {
  const std::size_t nv = m.ring().size();
  if (nv == 0) return MultiPoly::constant(m.ring(), values.at(0));
  Values vals;
  for (std::size_t i = 0; i < g.points.size(); ++i) vals.emplace(g.points[i], values[i]);
  Values coeffs = reconstruct(vals, nv, g, 0, g.total_degree);
  std::vector<Term> terms;
  for (auto& [e, c] : coeffs)
    if (c != 0) terms.push_back({e, c});
  return MultiPoly::from_terms(m.ring(), std::move(terms));
}

void require_square(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Internal, "determinant of non-square matrix");
}

}  // namespace

MultiPoly det_interpolate_serial(const PolyMatrix& m) {
  require_square(m);
  Grid g = make_grid(m);
  std::vector<Rational> values(g.points.size());
  for (std::size_t i = 0; i < g.points.size(); ++i) values[i] = value_at(m, g.points[i]);
  return assemble(m, g, values);
}

MultiPoly det_interpolate_parallel(const PolyMatrix& m) {
  require_square(m);
  Grid g = make_grid(m);
  std::vector<Rational> values(g.points.size());
  const long long total = static_cast<long long>(g.points.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < total; ++i) values[i] = value_at(m, g.points[static_cast<std::size_t>(i)]);
  return assemble(m, g, values);
}

}  // namespace kernels

MultiPoly det_poly_matrix(const PolyMatrix& m, DetStrategy strategy) {
  return strategy == DetStrategy::Bareiss ? det_bareiss(m) : kernels::det_interpolate_parallel(m);
}

}  // namespace leray
