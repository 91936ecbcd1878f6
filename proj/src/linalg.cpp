#include "leray/linalg.hpp"

#include <algorithm>
#include <map>

#include "leray/errors.hpp"

namespace leray {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::Internal, "matrix product shape mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) r(i, j) += aik * b(k, j);
    }
  return r;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::Internal, "matrix sum shape mismatch");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::Internal, "matrix difference shape mismatch");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix r = *this;
  for (auto& q : r.data_) q *= c;
  return r;
}

namespace {

// Integer matrix in row-major order after clearing row denominators.
struct IntMatrix {
  std::size_t rows, cols;
  std::vector<Integer> a;
  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

IntMatrix integerise(const RationalMatrix& m, std::span<const Rational> extra_col) {
  const bool aug = !extra_col.empty();
  IntMatrix out{m.rows(), m.cols() + (aug ? 1 : 0), {}};
  out.a.resize(out.rows * out.cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    if (aug) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), extra_col[r].get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational v = m(r, c) * l;
      out.at(r, c) = v.get_num();
    }
    if (aug) {
      Rational v = extra_col[r] * l;
      out.at(r, m.cols()) = v.get_num();
    }
  }
  return out;
}

// Bareiss forward elimination to row echelon form restricted to the first
// `pivot_cols` columns. Returns pivot column per echelon row.
std::vector<std::size_t> bareiss_echelon(IntMatrix& m, std::size_t pivot_cols, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  if (sign) *sign = 1;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        Integer v = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
      m.at(i, c) = 0;
    }
    // Rows above r are untouched; entries left of c in rows below are zero.
    prev = m.at(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<LinearSolution> solve_linear_exact(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::Internal, "solve_linear_exact: dimension mismatch");
  const std::size_t n = a.cols();
  LinearSolution sol;
  if (a.rows() == 0) {
    sol.particular.assign(n, 0);
    for (std::size_t f = 0; f < n; ++f) {
      std::vector<Rational> x(n);
      x[f] = 1;
      sol.nullspace.push_back(std::move(x));
    }
    return sol;
  }
  IntMatrix m = integerise(a, b);
  auto pivots = bareiss_echelon(m, n);
  const std::size_t rk = pivots.size();
  for (std::size_t r = rk; r < m.rows; ++r)
    if (m.at(r, n) != 0) return std::nullopt;
  auto back = [&](std::vector<Rational> x, bool homogeneous) {
    for (std::size_t k = rk; k-- > 0;) {
      std::size_t pc = pivots[k];
      Rational s = homogeneous ? Rational(0) : Rational(m.at(k, n));
      for (std::size_t j = pc + 1; j < n; ++j)
        if (m.at(k, j) != 0 && x[j] != 0) s -= Rational(m.at(k, j)) * x[j];
      x[pc] = s / Rational(m.at(k, pc));
    }
    return x;
  };
  sol.particular = back(std::vector<Rational>(n), false);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n);
    x[f] = 1;
    sol.nullspace.push_back(back(std::move(x), true));
  }
  return sol;
}

std::size_t rank(const RationalMatrix& a) {
  IntMatrix m = integerise(a, {});
  return bareiss_echelon(m, a.cols()).size();
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::Internal, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Rational scale = 1;
  IntMatrix m = integerise(a, {});
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    scale /= l;
  }
  int sign = 1;
  auto pivots = bareiss_echelon(m, n, &sign);
  if (pivots.size() < n) return 0;
  return Rational(m.at(n - 1, n - 1)) * scale * sign;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::Internal, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> m(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * 2 * n + j] = a(i, j);
    m[i * 2 * n + n + i] = 1;
  }
  const std::size_t w = 2 * n;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p * w + c] == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < w; ++j) std::swap(m[p * w + j], m[c * w + j]);
    Rational inv = 1 / m[c * w + c];
    for (std::size_t j = 0; j < w; ++j) m[c * w + j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i * w + c] == 0) continue;
      Rational f = m[i * w + c];
      for (std::size_t j = 0; j < w; ++j)
        if (m[c * w + j] != 0) m[i * w + j] -= f * m[c * w + j];
    }
  }
  RationalMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = m[i * w + n + j];
  return r;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& a) {
  // Faddeev-LeVerrier: exact over Q and adequate at desk scale.
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, n);  // M_0 = 0
  RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + id.scaled(c[n - k + 1]);
    RationalMatrix am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> primes;
  std::vector<int> mult;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    mult.push_back(0);
    while (n % p == 0) {
      n /= p;
      ++mult.back();
    }
  }
  if (n > 1) {
    primes.push_back(n);
    mult.push_back(1);
  }
  std::vector<Integer> divs{1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::size_t cur = divs.size();
    Integer pk = 1;
    for (int e = 1; e <= mult[i]; ++e) {
      pk *= primes[i];
      for (std::size_t j = 0; j < cur; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw Error(ErrorCode::Internal, "rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  while (coeffs.size() > 1 && coeffs[0] == 0) {
    roots.push_back(0);
    coeffs.erase(coeffs.begin());
  }
  while (coeffs.size() > 1) {
    Integer l = 1;
    for (const auto& q : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    Integer a0 = Rational(coeffs.front() * l).get_num();
    Integer an = Rational(coeffs.back() * l).get_num();
    std::optional<Rational> found;
    for (const auto& p : positive_divisors(a0)) {
      for (const auto& q : positive_divisors(an)) {
        for (int s : {1, -1}) {
          Rational cand(p * s, q);
          cand.canonicalize();
          if (horner(coeffs, cand) == 0) {
            found = cand;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
    roots.push_back(*found);
    // Synthetic division by (x - root).
    std::vector<Rational> q(coeffs.size() - 1);
    Rational carry = 0;
    for (std::size_t i = coeffs.size(); i-- > 1;) {
      carry = coeffs[i] + carry * *found;
      q[i - 1] = carry;
    }
    coeffs = std::move(q);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ------------------------------------------------------------------ sparse

SparseVec sparse_axpy(const SparseVec& x, const Rational& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rational s = x[i].second + a * y[j].second;
      if (s != 0) out.emplace_back(x[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseEchelon::SparseEchelon(std::size_t dim, bool track) : dim_(dim), track_(track) {}

SparseEchelon::Reduced SparseEchelon::reduce(const SparseVec& v) const {
  Reduced out;
  std::map<std::uint32_t, Rational> acc(v.begin(), v.end());
  std::map<std::uint32_t, Rational> comb;
  auto it = acc.begin();
  while (it != acc.end()) {
    if (it->second == 0) {
      it = acc.erase(it);
      continue;
    }
    std::int32_t r = it->first < pivot_row_.size() ? pivot_row_[it->first] : -1;
    if (r < 0) {
      out.remainder.emplace_back(it->first, it->second);
      ++it;
      continue;
    }
    Rational f = it->second;
    const Row& row = rows_[r];
    // row.entries[0] is the pivot (value 1) at it->first.
    for (std::size_t k = 1; k < row.entries.size(); ++k) acc[row.entries[k].first] -= f * row.entries[k].second;
    if (track_)
      for (const auto& [g, q] : row.tag) comb[g] += f * q;
    it = acc.erase(it);
  }
  for (auto& [g, q] : comb)
    if (q != 0) out.combination.emplace_back(g, q);
  return out;
}

bool SparseEchelon::insert(const SparseVec& v, const SparseVec& tag) {
  Reduced red = reduce(v);
  if (red.remainder.empty()) return false;
  Row row;
  Rational inv = 1 / red.remainder.front().second;
  row.entries = std::move(red.remainder);
  for (auto& e : row.entries) e.second *= inv;
  if (track_) {
    // tag - combination, scaled.
    SparseVec t = sparse_axpy(tag, Rational(-1), red.combination);
    for (auto& e : t) e.second *= inv;
    row.tag = std::move(t);
  }
  const std::uint32_t col = row.entries.front().first;
  if (col >= pivot_row_.size()) pivot_row_.resize(std::max<std::size_t>(col + 1, 2 * pivot_row_.size()), -1);
  pivot_row_[col] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool SparseEchelon::insert_generator(const SparseVec& v, std::uint32_t gen) {
  return insert(v, SparseVec{{gen, Rational(1)}});
}

}  // namespace leray
