#include <benchmark/benchmark.h>

#include "factorkit/ecf_tree.hpp"
#include "factorkit/ocf_tree.hpp"
#include "factorkit/oracle.hpp"

namespace {

void BM_EcfTreeSolve(benchmark::State& state) {
  auto tree = factorkit::generate_tree(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    auto cert = factorkit::ecf_tree_solve(tree);
    benchmark::DoNotOptimize(cert);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EcfTreeSolve)->RangeMultiplier(8)->Range(1 << 10, 1 << 20)->Complexity();

void BM_OcfTreeSolve(benchmark::State& state) {
  auto tree = factorkit::generate_tree(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    auto cert = factorkit::ocf_tree_solve(tree);
    benchmark::DoNotOptimize(cert);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OcfTreeSolve)->RangeMultiplier(8)->Range(1 << 10, 1 << 20)->Complexity();

}  // namespace
