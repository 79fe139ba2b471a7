#include <benchmark/benchmark.h>

#include "factorkit/multigraph.hpp"
#include "factorkit/oracle.hpp"

namespace {

void BM_Bridges(benchmark::State& state) {
  auto g = factorkit::generate_multigraph(static_cast<int>(state.range(0)),
                                          2 * static_cast<int>(state.range(0)),
                                          11, true);
  for (auto _ : state) {
    auto cut = factorkit::bridges(g);
    benchmark::DoNotOptimize(cut);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Bridges)->RangeMultiplier(8)->Range(1 << 10, 1 << 18)->Complexity();

void BM_ParseRenderRoundTrip(benchmark::State& state) {
  auto g = factorkit::generate_tree(static_cast<int>(state.range(0)), 3);
  std::string text = factorkit::render_graph(g);
  for (auto _ : state) {
    auto parsed = factorkit::parse_graph(text);
    benchmark::DoNotOptimize(parsed);
  }
}
BENCHMARK(BM_ParseRenderRoundTrip)->Range(1 << 10, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
