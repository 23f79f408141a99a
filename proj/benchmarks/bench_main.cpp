#include <benchmark/benchmark.h>

#include "hopflab/dupdend/primitives.hpp"
#include "hopflab/hopf/algebras.hpp"
#include "hopflab/theta/theta.hpp"
#include "hopflab/words/words.hpp"

using namespace hopflab;

namespace {

void BM_OrderedCoproduct(benchmark::State& state) {
  hopf::OrderedAlgebra ho;
  const auto basis = ho.basis(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& f : basis) benchmark::DoNotOptimize(ho.coproduct(f));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(basis.size()));
}
BENCHMARK(BM_OrderedCoproduct)->DenseRange(3, 5);

void BM_WordProduct(benchmark::State& state) {
  words::WordAlgebra fqsym(true);
  const auto basis = fqsym.basis(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& w : basis) benchmark::DoNotOptimize(fqsym.product(w, basis.front()));
  }
}
BENCHMARK(BM_WordProduct)->DenseRange(2, 4);

void BM_PrimTot(benchmark::State& state) {
  hopf::OrderedAlgebra ho;
  for (auto _ : state) benchmark::DoNotOptimize(dupdend::prim_tot(ho, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PrimTot)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_PairingMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta::pairing_matrix(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PairingMatrix)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
