#include <benchmark/benchmark.h>

#include "dunkl/bessel.hpp"
#include "dunkl/hypergeo.hpp"
#include "dunkl/jack.hpp"

namespace {

using namespace dunkl;

// Full table of C_λ at one point, fresh evaluator each iteration. The
// branching coefficients are cached per (α, N), so this times the recursion.
void BM_JackTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int w = static_cast<int>(state.range(1));
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = 0.3 + 0.2 * i;
  for (auto _ : state) {
    JackEvaluator ev(JackParameter(0.7), EvalVector(x), w);
    benchmark::DoNotOptimize(ev.C_weight(w).data());
  }
}
BENCHMARK(BM_JackTable)->Args({2, 60})->Args({3, 40})->Args({4, 24});

void BM_ScaledDifference(benchmark::State& state) {
  const MultiplicityB mult = MultiplicityB::from_mu(state.range(0), 1.0, 3);
  const EvalVector x({0.4, -0.6, 0.9}), y({0.5, 0.3, -0.8});
  SeriesPolicy policy;
  policy.max_weight = 60;
  for (auto _ : state) benchmark::DoNotOptimize(besselB_scaled_diff(mult, x, y, policy).value);
}
BENCHMARK(BM_ScaledDifference)->Arg(10)->Arg(10000);

void BM_Hyper0F0(benchmark::State& state) {
  const EvalVector x({-0.25, -1.0, -2.25}), y({0.5, 1.5, 3.0});
  SeriesPolicy policy;
  policy.max_weight = 120;
  for (auto _ : state)
    benchmark::DoNotOptimize(hyper_0F0(JackParameter(1.0), x, y, policy).value);
}
BENCHMARK(BM_Hyper0F0);

void BM_BesselJ(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(2.5, t));
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(20)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
