#include <benchmark/benchmark.h>

#include "qsc/qschubert.hpp"

using namespace qsc;

static void BM_QuantumProductGr36(benchmark::State& state) {
  const auto& R = ring(3, 6);
  QClass a = R.schubert(Partition({2, 1}));
  QClass b = R.schubert(Partition({3, 2, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(R.product(a, b));
  }
}
BENCHMARK(BM_QuantumProductGr36);

static void BM_GwThaddeus(benchmark::State& state) {
  std::vector<SchubertIndex> I{SchubertIndex(8, {2, 3, 4, 7}), SchubertIndex(8, {1, 3, 4, 7}),
                               SchubertIndex(8, {1, 3, 4, 7})};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw_invariant(4, 8, I, 2));
  }
}
BENCHMARK(BM_GwThaddeus);

static void BM_GwExhaustiveGr25(benchmark::State& state) {
  const auto& R = ring(2, 5);
  auto basis = R.basis();
  for (auto _ : state) {
    Int total = 0;
    for (const auto& a : basis)
      for (const auto& b : basis)
        for (const auto& c : basis) {
          Int codim = a.size() + b.size() + c.size() - R.dim();
          if (codim < 0 || codim % R.n() != 0) continue;
          total += R.gw({a, b, c}, codim / R.n());
        }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_GwExhaustiveGr25);
