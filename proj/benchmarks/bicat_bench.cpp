#include <benchmark/benchmark.h>

#include "spanbicat/adjunction.hpp"
#include "spanbicat/axioms.hpp"
#include "spanbicat/coherence.hpp"
#include "spanbicat/generic.hpp"
#include "spanbicat/reconstruct.hpp"
#include "spanbicat/span.hpp"

using namespace spanbicat;

static void BM_Coherence(benchmark::State& state) {
  auto f = span_fragment({1, 2}, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_coherence(*f).instances);
}
BENCHMARK(BM_Coherence)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_GenericCheck(benchmark::State& state) {
  auto f = span_fragment({1, 2}, 2);
  for (auto _ : state) {
    Analyzer an(*f);
    benchmark::DoNotOptimize(is_generic_bicategory(an).instances);
  }
}
BENCHMARK(BM_GenericCheck)->Unit(benchmark::kMillisecond);

static void BM_Axiom1(benchmark::State& state) {
  auto f = span_fragment({1, 2}, 2);
  for (auto _ : state) {
    Analyzer an(*f);
    benchmark::DoNotOptimize(check_axiom1(an).report.instances);
  }
}
BENCHMARK(BM_Axiom1)->Unit(benchmark::kMillisecond);

static void BM_AdjointSearch(benchmark::State& state) {
  auto f = span_fragment({1, 2, 3}, 3, 9);
  for (auto _ : state) {
    AdjointIndex adj(*f);
    benchmark::DoNotOptimize(adj.left_adjoints(0, 0).size());
  }
}
BENCHMARK(BM_AdjointSearch)->Unit(benchmark::kMillisecond);

static void BM_Roundtrip(benchmark::State& state) {
  auto f = span_fragment({1, 2}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_span(*f).passed());
}
BENCHMARK(BM_Roundtrip)->Unit(benchmark::kMillisecond);
