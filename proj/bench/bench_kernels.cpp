// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "leray/oracle.hpp"
#include "leray/parse.hpp"
#include "leray/pipeline.hpp"

using namespace leray;

namespace {

ProblemSpec transport() {
  ProblemSpec s;
  s.operator_text = "tau - xi1";
  s.front_text = "x1^2 + x2^3";
  s.seed = 3;
  return s;
}

const PolyMatrix& transport_matrix() {
  static Pipeline pl(transport());
  return pl.stages().system.M;
}

// Random dense matrix in three variables, entries of degree <= 2.
PolyMatrix random_matrix(std::size_t n) {
  static Ring r({"u", "v", "w"});
  PolyMatrix m(r, n, n);
  unsigned state = 12345;
  auto next = [&] { return (state = state * 1103515245u + 12345u) >> 16; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int t = 0; t < 3; ++t)
        m(i, j) += MultiPoly::monomial(r, {int(next() % 3), int(next() % 3), int(next() % 3)},
                                       int(next() % 19) - 9);
  return m;
}

template <MultiPoly (*Det)(const PolyMatrix&)>
void BM_det_transport(benchmark::State& st) {
  const auto& m = transport_matrix();
  for (auto _ : st) benchmark::DoNotOptimize(Det(m));
}

template <MultiPoly (*Det)(const PolyMatrix&)>
void BM_det_random(benchmark::State& st) {
  auto m = random_matrix(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Det(m));
}

template <RaySampleSet (*Sample)(const HyperbolicSymbol&, const MultiPoly&, const Rational&, const RaySampleOptions&)>
void BM_rays(benchmark::State& st) {
  Ring xi = HyperbolicSymbol::ring_for(2);
  auto P = HyperbolicSymbol::from_poly(parse_poly("tau^2 - xi1^2 - xi2^2", xi));
  Ring x({"x1", "x2"});
  auto F = parse_poly("x1^2 + x2^3", x);
  RaySampleOptions opt;
  opt.count = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(Sample(P, F, Rational(1), opt));
}

}  // namespace

BENCHMARK(BM_det_transport<kernels::det_interpolate_serial>)->Name("det_transport/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_det_transport<kernels::det_interpolate_parallel>)->Name("det_transport/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_det_random<kernels::det_interpolate_serial>)->Name("det_random/serial")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_det_random<kernels::det_interpolate_parallel>)->Name("det_random/parallel")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rays<kernels::sample_front_serial>)->Name("rays/serial")->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rays<kernels::sample_front_parallel>)->Name("rays/parallel")->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
