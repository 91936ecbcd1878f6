#include "leray/gaussmanin.hpp"

#include <numeric>
#include <random>

#include "leray/errors.hpp"
#include "leray/gcd.hpp"

namespace leray {

GaussManinData assemble_system(std::vector<PolyMatrix> P, std::vector<int> L, std::vector<int> p,
                               std::vector<int> phi_weights) {
  if (P.empty() || P.size() != p.size()) throw Error(ErrorCode::Internal, "assemble_system: need one matrix per component");
  const std::size_t mu = P[0].rows();
  for (const auto& m : P)
    if (m.rows() != mu || m.cols() != mu || m.ring() != P[0].ring())
      throw Error(ErrorCode::Internal, "assemble_system: matrices must be square of equal size over one ring");
  if (L.size() != mu || phi_weights.size() != mu) throw Error(ErrorCode::Internal, "assemble_system: L_V size mismatch");
  if (P[0].ring().size() != P.size()) throw Error(ErrorCode::Internal, "assemble_system: ring must be y0..y{K-1}");

  GaussManinData d;
  d.K = P.size();
  d.mu = mu;
  const Ring& y = P[0].ring();
  d.M = PolyMatrix(y, mu, mu);
  for (std::size_t l = 0; l < d.K; ++l) {
    Rational sign = (l % 2 == 0) ? 1 : -1;
    d.M = d.M + P[l].scaled(MultiPoly::variable(y, l) * (sign * p[l]));
    PolyMatrix r(y, mu, mu);
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; j < mu; ++j) r(i, j) = P[l](i, j) * (sign * L[i]);
    d.rhs.push_back(std::move(r));
  }
  d.P = std::move(P);
  d.L = std::move(L);
  d.p = std::move(p);
  d.phi_weights = std::move(phi_weights);
  return d;
}

GaussManinData assemble_system(const IcisMap& map, const PhiBasis& phi, const GMMatrices& gm) {
  return assemble_system(gm.P, gm.L, map.p, phi.weights);
}

int discriminant_weight(const GaussManinData& d) {
  const int sp = std::accumulate(d.p.begin(), d.p.end(), 0);
  int w = std::accumulate(d.L.begin(), d.L.end(), 0);
  for (int q : d.phi_weights) w -= q - sp;
  return w;
}

Discriminant discriminant(const GaussManinData& d, DetStrategy strategy) {
  Discriminant r;
  r.raw = det_poly_matrix(d.M, strategy);
  r.weight = discriminant_weight(d);
  if (r.raw.is_zero()) {
    r.degenerate = true;
    r.normalized = r.squarefree = r.raw;
    return r;
  }
  auto w = homogeneous_weight(r.raw, d.p);
  if (!w || *w != r.weight)
    throw Error(ErrorCode::VerificationFailed, "discriminant is not weighted-homogeneous of weight " +
                                                    std::to_string(r.weight));
  r.normalized = primitive_normalize(r.raw);
  r.squarefree = squarefree_part(r.normalized);
  return r;
}

void require_nondegenerate(const Discriminant& disc) {
  if (disc.degenerate) throw Error(ErrorCode::Degenerate, "discriminant det M vanishes identically");
}

ResidueExponents residue_exponents_K1(const GaussManinData& d) {
  if (d.K != 1) throw Error(ErrorCode::Degenerate, "residue exponents need K = 1, got K = " + std::to_string(d.K));
  std::vector<Rational> origin(1);
  RationalMatrix p0 = d.P[0].evaluate(origin);
  auto inv = inverse(p0.scaled(d.p[0]));
  if (!inv) throw Error(ErrorCode::Degenerate, "P^(0)(0) is singular");
  RationalMatrix a = p0;
  for (std::size_t i = 0; i < d.mu; ++i)
    for (std::size_t j = 0; j < d.mu; ++j) a(i, j) *= d.L[i];
  a = (a - RationalMatrix::identity(d.mu).scaled(d.p[0])) * *inv;
  ResidueExponents r;
  r.charpoly = characteristic_polynomial(a);
  auto roots = rational_roots(r.charpoly);
  if (!roots) throw Error(ErrorCode::Degenerate, "residue exponents are not all rational");
  r.exponents = std::move(*roots);
  return r;
}

std::vector<RationalMatrix> curvature_at(const GaussManinData& d, const std::vector<Rational>& y) {
  auto minv = inverse(d.M.evaluate(y));
  if (!minv) throw Error(ErrorCode::Degenerate, "curvature requested on det M = 0");
  std::vector<RationalMatrix> A(d.K), dM(d.K);
  for (std::size_t l = 0; l < d.K; ++l) {
    A[l] = d.rhs[l].evaluate(y) * *minv;
    dM[l] = d.M.derivative(l).evaluate(y);
  }
  // d_k A_l = (d_k B_l) M^-1 - B_l M^-1 (d_k M) M^-1 with B_l = rhs_l.
  std::vector<RationalMatrix> out;
  for (std::size_t k = 0; k < d.K; ++k)
    for (std::size_t l = k + 1; l < d.K; ++l) {
      auto dkAl = d.rhs[l].derivative(k).evaluate(y) * *minv - A[l] * dM[k] * *minv;
      auto dlAk = d.rhs[k].derivative(l).evaluate(y) * *minv - A[k] * dM[l] * *minv;
      out.push_back(dkAl - dlAk + A[l] * A[k] - A[k] * A[l]);
    }
  return out;
}

FlatnessReport flatness_check(const GaussManinData& d, std::size_t points, std::uint64_t seed) {
  FlatnessReport rep;
  if (d.K < 2) {
    rep.vacuous = true;
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  const std::size_t max_tries = 50 * points + 50;
  for (std::size_t tries = 0; rep.points < points && tries < max_tries; ++tries) {
    std::vector<Rational> y(d.K);
    for (auto& c : y) {
      c = Rational(num(rng), den(rng));
      c.canonicalize();
    }
    if (determinant(d.M.evaluate(y)) == 0) {
      ++rep.skipped;
      continue;
    }
    auto curv = curvature_at(d, y);
    for (const auto& c : curv)
      if (!c.is_zero()) {
        std::string pt;
        for (const auto& v : y) pt += (pt.empty() ? "" : ", ") + v.get_str();
        throw Error(ErrorCode::CurvatureNonzero, "curvature nonzero at y = (" + pt + ")");
      }
    rep.sample_points.push_back(std::move(y));
    ++rep.points;
  }
  if (rep.points < points) throw Error(ErrorCode::Degenerate, "flatness: could not sample points off det M = 0");
  return rep;
}

}  // namespace leray
