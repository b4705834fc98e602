#include <benchmark/benchmark.h>

#include "qsc/fusion.hpp"

using namespace qsc;

static void BM_VerlindeSl4Level2(benchmark::State& state) {
  FusionAlgebra alg(4, 2);
  Weight w = Weight::from_fundamental(4, {1, 0, 1});
  std::vector<Weight> nu(3, w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verlinde_rank(alg, nu));
  }
}
BENCHMARK(BM_VerlindeSl4Level2);

static void BM_H0ThaddeusBundle(benchmark::State& state) {
  LineBundleData L;
  L.n = 8;
  L.degN = 0;
  L.level = 4;
  L.weights.assign(3, Weight::from_fundamental(8, {1, 0, 0, 2, 0, 0, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h0(L));
  }
}
BENCHMARK(BM_H0ThaddeusBundle);
