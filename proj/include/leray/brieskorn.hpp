#pragma once

#include <map>
#include <memory>
#include <vector>

#include "leray/exterior.hpp"
#include "leray/icis.hpp"
#include "leray/polymatrix.hpp"

namespace leray {

// Classes phi_j du of the top-degree quotient; phi_j are staircase monomials.
struct PhiBasis {
  std::vector<Monomial> monomials;
  std::vector<int> weights;  // w(phi_j du) = w(phi_j) + sum v
  std::size_t mu() const { return monomials.size(); }
};

PhiBasis phi_basis(const IcisMap& map, const GroebnerLimits& limits = {});
PhiBasis phi_basis_from_staircase(const IcisMap& map, const Staircase& st);

struct FBasis {
  std::vector<DiffForm> representatives;  // monomial (N+1)-forms picked greedily
  std::vector<DiffForm> forms;            // exact forms (1/l) d i_E of the representatives
  std::vector<int> weights;               // l_j
  std::vector<std::string> dropped;       // linear components' variables removed first
};

// Greedy coset representatives of F by ascending weight up to weight_cap
// (0 means 4 * sum p). Throws CapExceeded when fewer than mu are found.
FBasis f_basis(const IcisMap& map, std::size_t mu, int weight_cap = 0);

// Number of F-classes of each weight up to the cap, computed on the map as
// given (no variable dropping). Used to cross-check dimensions.
std::map<int, std::size_t> f_space_dimensions(const IcisMap& map, int weight_cap);

struct LatticeCertificate {
  DiffForm input;
  std::vector<MultiPoly> row;  // P_{ij}(y), one per basis element j
  DiffForm eta;                // (N-1)-form cofactor
};

// Ring y0..y{K-1} in which reduction coefficients live.
Ring parameter_ring(std::size_t K);

// Decomposes weighted-homogeneous top forms as
//   g = sum_j P_j(f) phi_j du + df_0^...^df_{K-1}^d(eta)
// by exact linear algebra inside the single graded piece of g. The graded
// elimination is cached per weight, so reducing many forms of equal weight
// costs one factorisation.
class LatticeReducer {
 public:
  LatticeReducer(const IcisMap& map, const PhiBasis& basis);
  ~LatticeReducer();
  LatticeReducer(const LatticeReducer&) = delete;
  LatticeReducer& operator=(const LatticeReducer&) = delete;

  LatticeCertificate reduce(const DiffForm& g);
  // Re-expands the certificate and compares with its input exactly.
  bool verify(const LatticeCertificate& c) const;
  const Ring& y_ring() const { return y_ring_; }
  std::size_t cached_weights() const;

 private:
  struct Piece;
  Piece& piece(int weight);

  const IcisMap& map_;
  const PhiBasis& basis_;
  Ring y_ring_;
  DiffForm theta_;  // df_0 ^ ... ^ df_{K-1}
  std::map<int, std::unique_ptr<Piece>> pieces_;
  std::map<Monomial, MultiPoly> fpow_;
};

struct GMMatrices {
  std::vector<PolyMatrix> P;  // P^(0..K-1), entries in the parameter ring
  std::vector<int> L;         // diagonal of L_V
  std::vector<LatticeCertificate> certificates;  // row-major by (l, i)
};

GMMatrices gm_matrices(const IcisMap& map, const PhiBasis& phi, const FBasis& fb, LatticeReducer& reducer);

// Forced weight of P^(l)_{ij}: l_i + sum p - p_l - w(phi_j du).
int forced_entry_weight(const IcisMap& map, const PhiBasis& phi, const FBasis& fb, std::size_t l, std::size_t i,
                        std::size_t j);

}  // namespace leray
