#include <benchmark/benchmark.h>

#include "dpm/interfam.hpp"
#include "dpm/periods.hpp"
#include "dpm/pseudolattice.hpp"
#include "dpm/rootlattice.hpp"
#include "dpm/vancycles.hpp"

using namespace dpm;

static void BM_MirrorCheck(benchmark::State& st) {
  int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(mirror_check(d, 12));
}
BENCHMARK(BM_MirrorCheck)->DenseRange(1, 3);

static void BM_AllRoots(benchmark::State& st) {
  std::vector<Complex> c;
  for (int k = 0; k <= st.range(0); ++k) c.push_back(Complex(1.0 / (k + 1), 0.3 * k));
  CPoly p(c);
  for (auto _ : st) benchmark::DoNotOptimize(all_roots(p));
}
BENCHMARK(BM_AllRoots)->Arg(4)->Arg(12)->Arg(32);

static void BM_VanishingClasses(benchmark::State& st) {
  int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(vanishing_classes(d));
}
BENCHMARK(BM_VanishingClasses)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_VerifyTheorem(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_theorem(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(1, 3);

static void BM_HyperbolicModel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hyperbolic_model(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_HyperbolicModel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_Sweep(benchmark::State& st) {
  auto F = FamilySpec::between(3, 2);
  SweepOptions opt;
  opt.samples = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(sweep(F, opt));
}
BENCHMARK(BM_Sweep)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
