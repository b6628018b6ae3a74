#include <benchmark/benchmark.h>

#include "hypergrowth/diagnostics.hpp"
#include "hypergrowth/fitting.hpp"
#include "hypergrowth/ingest.hpp"
#include "hypergrowth/ratio.hpp"
#include "hypergrowth/special_functions.hpp"

using namespace hypergrowth;

namespace {

const HyperbolicParams kF{4.5, 2.2e-3};
const HyperbolicParams kG{7.0, 3.35e-3};

TimeSeries noisy_series(std::size_t n) {
  return synthesize(kF, evenly_spaced(0.0, 2000.0, n), {0.005}, 42);
}

void BM_FitHyperbolic(benchmark::State& state) {
  const TimeSeries s = noisy_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_hyperbolic(s, Weighting::unweighted));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitHyperbolic)->Arg(16)->Arg(256)->Arg(4096);

void BM_BreakTest(benchmark::State& state) {
  const TimeSeries s = noisy_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(break_test(s, 1750.0));
  }
}
BENCHMARK(BM_BreakTest)->Arg(41)->Arg(201)->Arg(2001);

void BM_EvalRatio(benchmark::State& state) {
  const RatioModel m = make_ratio(kF, kG);
  const auto pathway = static_cast<RatioPathway>(state.range(0));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_ratio(m, t, pathway));
    t = t < 2000.0 ? t + 0.5 : 0.0;
  }
}
BENCHMARK(BM_EvalRatio)->DenseRange(0, 2);

void BM_DiagnosticCurves(benchmark::State& state) {
  const RatioModel m = make_ratio(kF, kG);
  const auto grid = evenly_spaced(0.0, m.guard_time(), 512);
  for (auto _ : state) {
    const auto g = gradient_curve(m, grid);
    benchmark::DoNotOptimize(monotonicity_check(g));
  }
}
BENCHMARK(BM_DiagnosticCurves);

void BM_FisherSurvival(benchmark::State& state) {
  const double d2 = static_cast<double>(state.range(0));
  double f = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fisher_f_survival(f, 2.0, d2));
    f = f < 20.0 ? f * 1.1 : 0.1;
  }
}
BENCHMARK(BM_FisherSurvival)->Arg(10)->Arg(200)->Arg(5000);

}  // namespace
BENCHMARK_MAIN();
