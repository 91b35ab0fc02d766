// Serial reference vs the OpenMP kernel on GA(t,k)'.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "betti_lab/graph.hpp"
#include "betti_lab/hochster.hpp"
#include "betti_lab/reference.hpp"

namespace {

const betti::FieldSpec gf2{2};

void BM_reference(benchmark::State& state) {
  const auto g = betti::ga_prime(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(betti::reference::hochster_betti(g, gf2));
  state.counters["n"] = g.num_vertices();
}

void BM_kernel(benchmark::State& state) {
  const auto g = betti::ga_prime(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(betti::hochster_betti(g, gf2, {threads, 20}));
  state.counters["n"] = g.num_vertices();
  state.counters["threads"] = threads;
}

void kernel_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (const auto& [t, k] : {std::pair{2, 5}, std::pair{3, 5}, std::pair{3, 6}}) {
    b->Args({t, k, 1});
    if (max_threads > 1) b->Args({t, k, max_threads});
  }
}

}  // namespace

// The reference caps at 14 vertices, so GA(3,6)' is kernel-only.
BENCHMARK(BM_reference)->Args({2, 5})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel)->Apply(kernel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
