#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leray/gaussmanin.hpp"
#include "leray/io.hpp"
#include "leray/oracle.hpp"
#include "leray/phase.hpp"
#include "leray/wavefront.hpp"

namespace leray {

// An isolated complete intersection given directly instead of through a phase.
struct MapSpec {
  std::vector<std::string> vars;
  std::vector<std::string> components;
  std::vector<int> weights;
};

struct ProblemSpec {
  std::string operator_text;  // in tau, xi1..xin
  std::string front_text;     // in x1..xn
  std::optional<MapSpec> map;  // replaces operator and front when present
  int power = 2;
  std::optional<std::vector<int>> weights;
  std::optional<Rational> s;  // symbolic front parameter when empty
  std::uint64_t seed = 1;
  double tol = 1e-6;
  DetStrategy det = DetStrategy::Interpolate;
  int weight_cap = 0;
  GroebnerLimits limits;
  std::size_t hyperbolicity_samples = 64;
  std::size_t ray_points = 40;
  std::vector<double> t_values{0.1, 0.5, 1.0};
  std::size_t t_zero_samples = 50;
  // Full discriminants are skipped when the interpolation grid is larger.
  std::size_t discriminant_grid_budget = 2'000'000;
};

ProblemSpec problem_from_json(const Json& j);
Json problem_to_json(const ProblemSpec& spec);
ProblemSpec load_problem(const std::string& path);

// Brieskorn and Gauss-Manin stages of one map.
struct MapStages {
  IcisMap map;
  PhiBasis phi;
  FBasis fb;
  std::unique_ptr<LatticeReducer> reducer;
  GMMatrices gm;
  GaussManinData system;
};

// The map is moved into the result first so the reducer can refer to it.
std::unique_ptr<MapStages> run_map_stages(IcisMap map, const GroebnerLimits& limits = {}, int weight_cap = 0,
                                          const Staircase* staircase = nullptr);

// Interpolation grid size for det M, or nullopt past 2e8 points.
std::optional<std::size_t> discriminant_grid_size(const GaussManinData& d);

// Lazily evaluated end-to-end pipeline; each accessor runs what it needs.
class Pipeline {
 public:
  explicit Pipeline(ProblemSpec spec);
  const ProblemSpec& spec() const { return spec_; }
  bool direct_map() const { return spec_.map.has_value(); }
  const IcisMap& icis_map();

  const HyperbolicSymbol& symbol();
  const MultiPoly& front();
  const WeightSystem& weights();
  std::size_t c3_dimension();
  const HyperbolicityReport& hyperbolicity();
  void require_hyperbolic();
  const MultiPoly& psi();
  const PhaseExpansion& expansion();
  const PhaseMap& phase_map();
  MapStages& stages();
  // Full det M; nullopt when the grid exceeds the budget (reason recorded).
  const std::optional<Discriminant>& discriminant();
  const std::string& discriminant_note() const { return disc_note_; }
  const FrontResult& front_result();

 private:
  ProblemSpec spec_;
  std::optional<HyperbolicSymbol> symbol_;
  std::optional<MultiPoly> front_;
  std::optional<WeightSystem> weights_;
  std::optional<std::size_t> c3_;
  std::optional<HyperbolicityReport> hyper_;
  std::optional<MultiPoly> psi_;
  std::optional<PhaseExpansion> expansion_;
  std::optional<PhaseMap> map_;
  std::optional<IcisMap> direct_;
  std::unique_ptr<MapStages> stages_;
  bool disc_done_ = false;
  std::optional<Discriminant> disc_;
  std::string disc_note_;
  std::optional<FrontResult> front_result_;
};

}  // namespace leray
