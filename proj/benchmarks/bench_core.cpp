#include <benchmark/benchmark.h>

#include "hx/connectivity.hpp"
#include "hx/constructions.hpp"
#include "hx/maximality.hpp"
#include "hx/normalize.hpp"
#include "hx/random.hpp"

namespace {

void BM_kappa_oracle(benchmark::State& state) {
  const hx::Hypergraph h = hx::random_hypergraph(state.range(0), 3, 0.5, 42);
  for (auto _ : state) {
    auto res = hx::kappa_oracle(h);
    benchmark::DoNotOptimize(res.kappa);
  }
}
BENCHMARK(BM_kappa_oracle)->DenseRange(8, 14, 2);

void BM_kappa_flow(benchmark::State& state) {
  const hx::Hypergraph h = hx::random_hypergraph(state.range(0), 3, 0.5, 42);
  for (auto _ : state) {
    auto res = hx::kappa_flow(h);
    benchmark::DoNotOptimize(res.kappa);
  }
}
BENCHMARK(BM_kappa_flow)->DenseRange(8, 14, 2);

void BM_build_msh(benchmark::State& state) {
  for (auto _ : state) {
    auto h = hx::build_msh(state.range(0), 3, 6, 3);
    benchmark::DoNotOptimize(h.edge_count());
  }
}
BENCHMARK(BM_build_msh)->Arg(12)->Arg(24)->Arg(48);

void BM_greedy_maximalize(benchmark::State& state) {
  const hx::Hypergraph start = hx::Hypergraph::build(state.range(0), 2, {});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto h = hx::greedy_maximalize(start, 2, 4, ++seed);
    benchmark::DoNotOptimize(h.edge_count());
  }
}
BENCHMARK(BM_greedy_maximalize)->DenseRange(8, 12, 2);

void BM_normalize(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto sp = hx::random_spectrum(state.range(0), 2, 6, 2, ++seed);
    auto res = hx::normalize(sp);
    benchmark::DoNotOptimize(res.trace.size());
  }
}
BENCHMARK(BM_normalize)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
