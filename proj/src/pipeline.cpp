#include "leray/pipeline.hpp"

#include <algorithm>
#include <cctype>

#include "leray/errors.hpp"
#include "leray/parse.hpp"

namespace leray {

namespace {

// Largest k among identifiers spelled prefix + k; parse_poly validates the rest.
std::size_t max_index(const std::string& text, const std::string& prefix) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size();) {
    if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
    std::string id = text.substr(i, j - i);
    if (id.size() > prefix.size() && id.compare(0, prefix.size(), prefix) == 0 &&
        std::all_of(id.begin() + static_cast<long>(prefix.size()), id.end(), [](char c) { return std::isdigit(c); }))
      n = std::max<std::size_t>(n, std::stoul(id.substr(prefix.size())));
    i = j;
  }
  return n;
}

}  // namespace

ProblemSpec problem_from_json(const Json& j) {
  ProblemSpec s;
  try {
    if (j.contains("map")) {
      const auto& m = j["map"];
      s.map = MapSpec{m.at("vars").get<std::vector<std::string>>(), m.at("components").get<std::vector<std::string>>(),
                      m.at("weights").get<std::vector<int>>()};
    } else {
      s.operator_text = j.at("operator").get<std::string>();
      s.front_text = j.at("front").get<std::string>();
    }
    const Json opt = j.value("options", Json::object());
    s.power = opt.value("powerP", s.power);
    if (opt.contains("weights") && !opt["weights"].is_null()) s.weights = opt["weights"].get<std::vector<int>>();
    if (opt.contains("s") && !opt["s"].is_null()) s.s = rational_from_json(opt["s"]);
    s.seed = opt.value("seed", s.seed);
    s.tol = opt.value("tol", s.tol);
    if (opt.contains("det")) {
      auto d = opt["det"].get<std::string>();
      if (d == "bareiss") s.det = DetStrategy::Bareiss;
      else if (d == "interp") s.det = DetStrategy::Interpolate;
      else throw Error(ErrorCode::Usage, "det must be bareiss or interp");
    }
    s.weight_cap = opt.value("weight_cap", s.weight_cap);
    s.limits.max_pairs = opt.value("max_pairs", s.limits.max_pairs);
    s.limits.max_degree = opt.value("max_degree", s.limits.max_degree);
    s.hyperbolicity_samples = opt.value("hyperbolicity_samples", s.hyperbolicity_samples);
    s.ray_points = opt.value("ray_points", s.ray_points);
    if (opt.contains("t_values")) s.t_values = opt["t_values"].get<std::vector<double>>();
    s.t_zero_samples = opt.value("t_zero_samples", s.t_zero_samples);
    s.discriminant_grid_budget = opt.value("discriminant_grid_budget", s.discriminant_grid_budget);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::SyntaxError, std::string("problem file: ") + ex.what());
  }
  if (s.power < 2) throw Error(ErrorCode::Usage, "powerP must be at least 2");
  return s;
}

Json problem_to_json(const ProblemSpec& s) {
  Json opt;
  opt["powerP"] = s.power;
  opt["weights"] = s.weights ? Json(*s.weights) : Json(nullptr);
  opt["s"] = s.s ? rational_to_json(*s.s) : Json(nullptr);
  opt["seed"] = s.seed;
  opt["tol"] = s.tol;
  opt["det"] = det_strategy_name(s.det);
  opt["weight_cap"] = s.weight_cap;
  opt["max_pairs"] = s.limits.max_pairs;
  opt["max_degree"] = s.limits.max_degree;
  opt["hyperbolicity_samples"] = s.hyperbolicity_samples;
  opt["ray_points"] = s.ray_points;
  opt["t_values"] = s.t_values;
  opt["t_zero_samples"] = s.t_zero_samples;
  opt["discriminant_grid_budget"] = s.discriminant_grid_budget;
  Json j;
  if (s.map) {
    j["map"] = Json{{"vars", s.map->vars}, {"components", s.map->components}, {"weights", s.map->weights}};
  } else {
    j["operator"] = s.operator_text;
    j["front"] = s.front_text;
  }
  j["options"] = opt;
  return j;
}

ProblemSpec load_problem(const std::string& path) { return problem_from_json(read_json_file(path)); }

std::unique_ptr<MapStages> run_map_stages(IcisMap map, const GroebnerLimits& limits, int weight_cap,
                                          const Staircase* staircase) {
  auto st = std::make_unique<MapStages>();
  st->map = std::move(map);
  st->phi = staircase ? phi_basis_from_staircase(st->map, *staircase) : phi_basis(st->map, limits);
  st->fb = f_basis(st->map, st->phi.mu(), weight_cap);
  st->reducer = std::make_unique<LatticeReducer>(st->map, st->phi);
  st->gm = gm_matrices(st->map, st->phi, st->fb, *st->reducer);
  st->system = assemble_system(st->map, st->phi, st->gm);
  return st;
}

std::optional<std::size_t> discriminant_grid_size(const GaussManinData& d) {
  long double box = 1;
  for (int b : det_degree_bounds(d.M)) box *= b + 1;
  const int deg = det_total_degree_bound(d.M);
  long double simplex = 1;
  for (std::size_t i = 1; i <= d.K; ++i) simplex = simplex * (deg + static_cast<long double>(i)) / i;
  long double g = std::min(box, simplex);
  if (g > 2e8L) return std::nullopt;
  return static_cast<std::size_t>(g);
}

Pipeline::Pipeline(ProblemSpec spec) : spec_(std::move(spec)) {}

const IcisMap& Pipeline::icis_map() {
  if (direct_map()) {
    if (!direct_) {
      Ring r(spec_.map->vars);
      std::vector<MultiPoly> f;
      for (const auto& c : spec_.map->components) f.push_back(parse_poly(c, r));
      direct_ = IcisMap::make(std::move(f), spec_.map->weights);
    }
    return *direct_;
  }
  return phase_map().map;
}

const HyperbolicSymbol& Pipeline::symbol() {
  if (direct_map()) throw Error(ErrorCode::Usage, "this command needs an operator and a front, the problem gives a map");
  if (!symbol_) {
    std::size_t n = std::max(max_index(spec_.operator_text, "xi"), max_index(spec_.front_text, "x"));
    symbol_ = HyperbolicSymbol::from_poly(parse_poly(spec_.operator_text, HyperbolicSymbol::ring_for(n)));
  }
  return *symbol_;
}

const MultiPoly& Pipeline::front() {
  if (!front_) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= symbol().n; ++i) names.push_back("x" + std::to_string(i));
    front_ = parse_poly(spec_.front_text, Ring(names));
  }
  return *front_;
}

const WeightSystem& Pipeline::weights() {
  if (!weights_) weights_ = spec_.weights ? check_weights(front(), *spec_.weights) : discover_weights(front());
  return *weights_;
}

std::size_t Pipeline::c3_dimension() {
  if (!c3_) c3_ = check_c3(front());
  return *c3_;
}

const HyperbolicityReport& Pipeline::hyperbolicity() {
  if (!hyper_) hyper_ = check_strict_hyperbolicity(symbol(), spec_.hyperbolicity_samples, spec_.seed);
  return *hyper_;
}

void Pipeline::require_hyperbolic() {
  const auto& h = hyperbolicity();
  if (h.passed) return;
  std::string w;
  for (const auto& v : h.witness) w += (w.empty() ? "" : ", ") + v.get_str();
  throw Error(ErrorCode::NotHyperbolic, "symbol has " + std::to_string(h.real_roots_at_witness) +
                                            " distinct real roots at xi = (" + w + ")");
}

const MultiPoly& Pipeline::psi() {
  if (!psi_) psi_ = build_phase(symbol(), front());
  return *psi_;
}

const PhaseExpansion& Pipeline::expansion() {
  if (!expansion_) {
    weights();
    c3_dimension();
    require_hyperbolic();
    expansion_ = expand_phase(psi(), front(), weights(), symbol().m);
  }
  return *expansion_;
}

const PhaseMap& Pipeline::phase_map() {
  if (!map_) map_ = build_mapping(expansion(), spec_.power, spec_.limits);
  return *map_;
}

MapStages& Pipeline::stages() {
  if (!stages_) {
    if (direct_map()) {
      stages_ = run_map_stages(icis_map(), spec_.limits, spec_.weight_cap);
    } else {
      const auto& pm = phase_map();
      stages_ = run_map_stages(pm.map, spec_.limits, spec_.weight_cap, &pm.phi_staircase);
    }
  }
  return *stages_;
}

const std::optional<Discriminant>& Pipeline::discriminant() {
  if (!disc_done_) {
    const auto& sys = stages().system;
    auto grid = discriminant_grid_size(sys);
    if (spec_.det == DetStrategy::Interpolate && (!grid || *grid > spec_.discriminant_grid_budget)) {
      disc_note_ = "skipped: interpolation grid of " + (grid ? std::to_string(*grid) : std::string("> 2e8")) +
                   " points exceeds the budget of " + std::to_string(spec_.discriminant_grid_budget);
    } else {
      disc_ = leray::discriminant(sys, spec_.det);
      require_nondegenerate(*disc_);
    }
    disc_done_ = true;
  }
  return disc_;
}

const FrontResult& Pipeline::front_result() {
  if (!front_result_) {
    FrontOptions opt;
    opt.s = spec_.s;
    const auto& d = discriminant();
    if (d) {
      opt.strategy = FrontStrategy::SubstituteAfterDet;
      opt.discriminant = &d->raw;
    }
    front_result_ = front_polynomial(stages().system, phase_map(), expansion(), opt);
  }
  return *front_result_;
}

}  // namespace leray
