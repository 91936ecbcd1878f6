#include "leray/report.hpp"

#include <sstream>

#include "leray/errors.hpp"
#include "leray/numeric.hpp"

namespace leray {

namespace {

const char* case_name(PhaseCase c) { return c == PhaseCase::Case1 ? "Case1" : "Case2"; }

Json doubles(const std::vector<double>& v) { return Json(v); }

Json rationals(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(rational_to_json(q));
  return j;
}

Json discriminant_json(const Discriminant& d) {
  return Json{{"raw", poly_to_json(d.raw)},
              {"normalized", poly_to_json(d.normalized)},
              {"squarefree", poly_to_json(d.squarefree)},
              {"weight", d.weight},
              {"degenerate", d.degenerate}};
}

Rational ray_s(const Pipeline& pl) { return pl.spec().s.value_or(Rational(1)); }

}  // namespace

Json error_record(ErrorCode code, const std::string& message) {
  return Json{{"error", error_code_name(code)}, {"code", static_cast<int>(code)}, {"message", message}};
}

Json check_report(Pipeline& pl) {
  const auto& w = pl.weights();
  const auto& h = pl.hyperbolicity();
  Json j;
  j["operator"] = poly_to_json(pl.symbol().P);
  j["front"] = poly_to_json(pl.front());
  j["m"] = pl.symbol().m;
  j["n"] = pl.symbol().n;
  j["weights"] = w.w;
  j["front_weight"] = w.total;
  j["c3_dimension"] = pl.c3_dimension();
  j["hyperbolicity"] = Json{{"passed", h.passed},
                            {"samples", h.samples},
                            {"witness", rationals(h.witness)},
                            {"real_roots_at_witness", h.real_roots_at_witness}};
  return j;
}

Json phase_report(Pipeline& pl) {
  const auto& e = pl.expansion();
  Json terms = Json::array();
  for (const auto& t : e.terms)
    terms.push_back({{"alpha", t.alpha}, {"weight", monomial_weight(t.alpha, e.weights.w)}, {"W", poly_to_json(t.W)}});
  return Json{{"psi", poly_to_json(pl.psi())},
              {"psi_terms", pl.psi().size()},
              {"F", poly_to_json(e.F)},
              {"base", poly_to_json(e.base)},
              {"sign", e.sign},
              {"case", case_name(e.phase_case)},
              {"mu", e.mu},
              {"weights", e.weights.w},
              {"front_weight", e.weights.total},
              {"bound", rational_to_json(e.bound)},
              {"deformations", terms}};
}

Json map_report(Pipeline& pl) {
  const IcisMap& m = pl.icis_map();
  Json f = Json::array();
  for (const auto& c : m.f) f.push_back(poly_to_json(c));
  Json j{{"vars", m.ring.names()}, {"components", f}, {"v", m.v}, {"p", m.p}, {"K", m.K()}, {"N", m.N()}};
  if (!pl.direct_map()) {
    const auto& pm = pl.phase_map();
    j["powerP"] = m.power;
    j["coupled"] = pm.coupled;
    j["constant_term"] = pm.constant_term ? Json(*pm.constant_term) : Json(nullptr);
    j["rescale"] = pm.rescale;
    j["divisor"] = pm.divisor;
    j["milnor_number"] = pm.phi_staircase.monomials.size();
  }
  return j;
}

Json milnor_report(Pipeline& pl) {
  auto& st = pl.stages();
  return Json{{"mu", st.phi.mu()},
              {"phi_monomials", monomial_list(st.phi.monomials)},
              {"phi_weights", st.phi.weights},
              {"f_weights", st.fb.weights},
              {"dropped_linear", st.fb.dropped}};
}

Json gm_report(Pipeline& pl) {
  auto& st = pl.stages();
  const auto& d = st.system;
  Json P = Json::array(), rhs = Json::array();
  for (std::size_t l = 0; l < d.K; ++l) {
    P.push_back(matrix_to_json(d.P[l]));
    rhs.push_back(matrix_to_json(d.rhs[l]));
  }
  Json meta{{"phi_monomials", monomial_list(st.phi.monomials)},
            {"phi_weights", st.phi.weights},
            {"u_vars", st.map.ring.names()},
            {"v", st.map.v}};
  if (!pl.direct_map()) {
    const auto& e = pl.expansion();
    const auto& pm = pl.phase_map();
    meta["case"] = case_name(e.phase_case);
    meta["powerP"] = st.map.power;
    meta["front_weights"] = e.weights.w;
    meta["sign"] = e.sign;
    meta["interpretation"] = Json{
        {"y0", "F(z) = s"},
        {"y1", pm.constant_term ? "-sign * W of the constant deformation" : "0"},
        {"y_j", "sign * W of coupled deformation j - 2, in the order of phase.json"}};
  }
  const auto& disc = pl.discriminant();
  return Json{{"K", d.K},
              {"mu", d.mu},
              {"p", d.p},
              {"L", d.L},
              {"P", P},
              {"M", matrix_to_json(d.M)},
              {"rhs", rhs},
              {"discriminant", disc ? discriminant_json(*disc) : Json(nullptr)},
              {"discriminant_note", pl.discriminant_note()},
              {"expected_discriminant_weight", discriminant_weight(d)},
              {"metadata", meta}};
}

Json discriminant_report(Pipeline& pl) {
  const auto& disc = pl.discriminant();
  if (!disc) throw Error(ErrorCode::ResourceLimit, "discriminant " + pl.discriminant_note());
  Json j = discriminant_json(*disc);
  j["strategy"] = det_strategy_name(pl.spec().det);
  j["expr"] = to_string(disc->normalized);
  return j;
}

Json front_report(Pipeline& pl) {
  const auto& fr = pl.front_result();
  Json b;
  for (const auto& [k, v] : fr.bindings) b[k] = poly_to_json(v);
  return Json{{"phi", poly_to_json(fr.phi)},
              {"phi_expr", to_string(fr.phi)},
              {"raw", poly_to_json(fr.raw)},
              {"squarefree", poly_to_json(fr.squarefree)},
              {"case", case_name(fr.phase_case)},
              {"powerP", fr.power},
              {"s", fr.s ? rational_to_json(*fr.s) : Json("symbolic")},
              {"strategy", front_strategy_name(fr.strategy)},
              {"bindings", b}};
}

Json verify_discriminant_report(Pipeline& pl) {
  const auto& disc = pl.discriminant();
  if (!disc) throw Error(ErrorCode::ResourceLimit, "discriminant " + pl.discriminant_note());
  auto elim = critical_locus_eliminant(pl.stages().map, pl.spec().limits);
  auto v = compare_discriminants(disc->raw, elim, pl.spec().seed);
  Json e = Json::array();
  for (const auto& g : elim) e.push_back(poly_to_json(g));
  Json j{{"equal", v.equal},
         {"exact", v.exact},
         {"delta_points", v.delta_points},
         {"eliminant_points", v.eliminant_points},
         {"max_residual", v.max_residual},
         {"witness", doubles(v.witness)},
         {"eliminant", e},
         {"discriminant_squarefree", poly_to_json(disc->squarefree)}};
  if (!v.equal) throw Error(ErrorCode::VerificationFailed, "discriminant and critical locus differ: " + j.dump());
  return j;
}

RayVerification verify_rays(Pipeline& pl) {
  const Rational s = ray_s(pl);
  const auto& fr = pl.front_result();
  MultiPoly phi = specialize_s(fr, s);
  RaySampleOptions opt;
  opt.count = pl.spec().ray_points;
  opt.seed = pl.spec().seed;
  opt.t_values = pl.spec().t_values;
  auto set = sample_front(pl.symbol(), pl.front(), s, opt);
  auto rep = eval_front_on_samples(phi, set.samples, pl.spec().tol);
  auto tz = t_zero_check(fr, pl.front(), s, pl.spec().t_zero_samples, pl.spec().seed + 1);

  std::vector<double> res;
  for (const auto& smp : set.samples) {
    std::vector<double> pt = smp.x;
    pt.push_back(smp.t);
    res.push_back(relative_residual(phi, pt));
  }
  std::ostringstream csv;
  write_ray_csv(csv, set.samples, res);

  RayVerification out;
  out.passed = rep.passed && !rep.no_data && tz.passed;
  out.csv = csv.str();
  out.report = Json{{"s", rational_to_json(s)},
                    {"tol", pl.spec().tol},
                    {"samples", rep.samples},
                    {"skipped", set.skipped},
                    {"max_residual", rep.max_residual},
                    {"witness", doubles(rep.witness)},
                    {"passed", rep.passed && !rep.no_data},
                    {"t_zero", Json{{"samples", tz.samples},
                                    {"max_residual", tz.max_residual},
                                    {"no_real_points", tz.no_real_points},
                                    {"passed", tz.passed}}}};
  return out;
}

}  // namespace leray
