// Microbenchmarks for the hot paths: relation algebra on bit matrices,
// closure computations, topology materialization, and one small sweep suite.

#include <benchmark/benchmark.h>

#include "unilab/connectivity.hpp"
#include "unilab/generators.hpp"
#include "unilab/sweep.hpp"

namespace {

using namespace unilab;

void bm_compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  Relation u = random_relation(rng, FiniteSpace(n), 30);
  Relation v = random_relation(rng, FiniteSpace(n), 30);
  for (auto _ : state) {
    Relation w = compose(u, v);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(bm_compose)->Arg(16)->Arg(64)->Arg(256);

void bm_equivalence_closure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(11);
  Relation u = random_reflexive_symmetric(rng, FiniteSpace(n), 5);
  for (auto _ : state) {
    Relation w = equivalence_closure(u);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(bm_equivalence_closure)->Arg(16)->Arg(64)->Arg(256);

void bm_closure_of_subset(benchmark::State& state) {
  Rng rng(3);
  SemiMetric d = random_semimetric(rng, FiniteSpace(12));
  UniformityBase base = base_from_semimetric(d);
  ElementSet a = ElementSet::of(12, {0, 3, 7});
  for (auto _ : state) {
    ElementSet c = closure(base, a);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_closure_of_subset);

void bm_topology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  SemiMetric d = random_ultrametric(rng, FiniteSpace(n));
  UniformityBase base = base_from_semimetric(d);
  for (auto _ : state) {
    Topology t = topology(base, n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(bm_topology)->Arg(8)->Arg(12);

void bm_sweep_relation_algebra(benchmark::State& state) {
  SweepConfig config;
  config.seed = 1;
  config.instance_count = 20;
  config.max_size = 5;
  config.suites = {"relation-algebra"};
  for (auto _ : state) {
    SweepReport r = run_sweep(config);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_sweep_relation_algebra);

}  // namespace

BENCHMARK_MAIN();
