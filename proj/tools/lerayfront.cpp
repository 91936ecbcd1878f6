// lerayfront: command-line driver for the wavefront pipeline.
#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <omp.h>

#include "leray/errors.hpp"
#include "leray/report.hpp"

using namespace leray;
namespace fs = std::filesystem;

namespace {

struct Overrides {
  std::optional<int> power;
  std::optional<std::string> weights;
  std::optional<std::string> s;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::string> det;
  std::optional<int> weight_cap;
  std::optional<std::size_t> max_pairs;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Usage, "--weights expects comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

void apply(ProblemSpec& spec, const Overrides& o) {
  if (o.power) {
    if (*o.power < 2) throw Error(ErrorCode::Usage, "--power-P must be at least 2");
    spec.power = *o.power;
  }
  if (o.weights) spec.weights = parse_int_list(*o.weights);
  if (o.s) spec.s = rational_from_json(Json(*o.s));
  if (o.seed) spec.seed = *o.seed;
  if (o.tol) spec.tol = *o.tol;
  if (o.det) spec.det = *o.det == "bareiss" ? DetStrategy::Bareiss : DetStrategy::Interpolate;
  if (o.weight_cap) spec.weight_cap = *o.weight_cap;
  if (o.max_pairs) spec.limits.max_pairs = *o.max_pairs;
}

class Runner {
 public:
  Runner(Pipeline& pl, fs::path out) : pl_(pl), out_(std::move(out)) {}

  void emit(const std::string& name, const Json& j) {
    write_json_file((out_ / name).string(), j);
    std::cerr << "  wrote " << (out_ / name).string() << "  (" << elapsed() << " s)\n";
  }

  void text(const std::string& name, const std::string& body) {
    std::ofstream os(out_ / name);
    if (!os) throw Error(ErrorCode::Io, "cannot write " + (out_ / name).string());
    os << body;
    std::cerr << "  wrote " << (out_ / name).string() << "  (" << elapsed() << " s)\n";
  }

  int run(const std::string& cmd) {
    if (cmd == "check") {
      Json j = check_report(pl_);
      emit("check.json", j);
      if (!pl_.hyperbolicity().passed) pl_.require_hyperbolic();
    } else if (cmd == "phase") {
      emit("phase.json", phase_report(pl_));
    } else if (cmd == "build-map") {
      emit("map.json", map_report(pl_));
    } else if (cmd == "milnor") {
      emit("milnor.json", milnor_report(pl_));
    } else if (cmd == "gm") {
      emit("gm.json", gm_report(pl_));
    } else if (cmd == "discriminant") {
      emit("discriminant.json", discriminant_report(pl_));
    } else if (cmd == "wavefront") {
      emit("front.json", front_report(pl_));
    } else if (cmd == "verify-discriminant") {
      emit("verify-discriminant.json", verify_discriminant_report(pl_));
    } else if (cmd == "verify-rays") {
      return rays();
    } else if (cmd == "all") {
      return all();
    }
    return 0;
  }

 private:
  int rays() {
    auto v = verify_rays(pl_);
    text("verify.csv", v.csv);
    emit("verify-rays.json", v.report);
    if (!v.passed) throw Error(ErrorCode::VerificationFailed, "front polynomial does not vanish on ray samples: " +
                                                                  v.report.dump());
    return 0;
  }

  int all() {
    Json summary;
    summary["problem"] = problem_to_json(pl_.spec());
    emit("check.json", check_report(pl_));
    pl_.require_hyperbolic();
    emit("phase.json", phase_report(pl_));
    emit("map.json", map_report(pl_));
    emit("milnor.json", milnor_report(pl_));
    emit("gm.json", gm_report(pl_));
    emit("front.json", front_report(pl_));
    auto v = verify_rays(pl_);
    text("verify.csv", v.csv);
    emit("verify-rays.json", v.report);
    const auto& fr = pl_.front_result();
    summary["mu"] = pl_.stages().phi.mu();
    summary["K"] = pl_.stages().map.K();
    summary["case"] = fr.phase_case == PhaseCase::Case1 ? "Case1" : "Case2";
    summary["front_terms"] = fr.phi.size();
    summary["front_degree"] = fr.phi.degree();
    summary["discriminant"] = pl_.discriminant() ? "computed" : pl_.discriminant_note();
    summary["verify_rays"] = v.report;
    summary["passed"] = v.passed;
    emit("summary.json", summary);
    if (!v.passed) throw Error(ErrorCode::VerificationFailed, "ray verification failed; see verify-rays.json");
    return 0;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  Pipeline& pl_;
  fs::path out_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int fail(const fs::path& out, ErrorCode code, const std::string& message) {
  Json rec = error_record(code, message);
  std::cerr << rec.dump() << "\n";
  std::error_code ec;
  if (!out.empty() && fs::is_directory(out, ec)) {
    std::ofstream os(out / "error.json");
    os << rec.dump(2) << "\n";
  }
  return static_cast<int>(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss-Manin systems and wavefront polynomials for hyperbolic Cauchy problems"};
  std::string cmd, spec_path, out_dir = ".";
  Overrides o;
  app.add_option("command", cmd, "check | phase | build-map | milnor | gm | discriminant | wavefront | "
                                  "verify-discriminant | verify-rays | all")
      ->required()
      ->check(CLI::IsMember({"check", "phase", "build-map", "milnor", "gm", "discriminant", "wavefront",
                             "verify-discriminant", "verify-rays", "all"}));
  app.add_option("--spec", spec_path, "problem file (JSON)")->required();
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--power-P", o.power, "power P of the auxiliary variable");
  app.add_option("--weights", o.weights, "front weights, comma separated");
  app.add_option("--s", o.s, "front parameter s (rational); symbolic when absent");
  app.add_option("--seed", o.seed, "seed for every sampler");
  app.add_option("--tol", o.tol, "ray residual tolerance");
  app.add_option("--det", o.det, "determinant strategy")->check(CLI::IsMember({"bareiss", "interp"}));
  app.add_option("--weight-cap", o.weight_cap, "largest weight scanned for the F basis");
  app.add_option("--max-pairs", o.max_pairs, "Groebner pair cap");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fail({}, ErrorCode::Usage, e.what());
  }

  if (const char* t = std::getenv("LERAYFRONT_THREADS")) {
    int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }

  fs::path out(out_dir);
  try {
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create " + out.string() + ": " + ec.message());
    ProblemSpec spec = load_problem(spec_path);
    apply(spec, o);
    Pipeline pl(spec);
    Runner r(pl, out);
    return r.run(cmd);
  } catch (const Error& e) {
    return fail(out, e.code(), e.what());
  } catch (const std::exception& e) {
    return fail(out, ErrorCode::Internal, e.what());
  }
}
