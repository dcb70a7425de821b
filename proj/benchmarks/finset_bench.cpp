#include <benchmark/benchmark.h>

#include "spanbicat/finset.hpp"
#include "spanbicat/span.hpp"

using namespace spanbicat;

static void BM_Pullback(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto fs = all_functions({n}, {n});
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < fs.size(); i += 7) {
      for (std::size_t j = 0; j < fs.size(); j += 11) total += pullback(fs[i], fs[j]).apex.size;
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_Pullback)->Arg(2)->Arg(3)->Arg(4);

static void BM_ComposeSpans(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto legs = all_functions({n}, {n});
  std::vector<Span> spans;
  for (std::size_t i = 0; i < legs.size(); i += 3) spans.emplace_back(legs[i], legs[(i * 5 + 1) % legs.size()]);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const Span& a : spans) {
      for (const Span& b : spans) total += compose_spans(a, b).apex.size;
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ComposeSpans)->Arg(2)->Arg(3);
