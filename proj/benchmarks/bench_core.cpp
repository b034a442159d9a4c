#include <benchmark/benchmark.h>

#include "bruhat/order.hpp"
#include "bruhat/planar_tree.hpp"
#include "bruhat/projection.hpp"
#include "bruhat/trialgebra.hpp"

using namespace bruhat;

namespace {

void BM_EnumerateWords(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pwords(n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(enumerate_pwords(n).size()));
}
BENCHMARK(BM_EnumerateWords)->DenseRange(4, 7);

void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(4, 8);

void BM_BuildBruhatPoset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_order(n, OrderKind::Bruhat, 7));
}
BENCHMARK(BM_BuildBruhatPoset)->DenseRange(3, 6);

void BM_StarShuffleMethod(benchmark::State& state) {
  PackedWord a = PackedWord::parse("[2,1,3]");
  PackedWord b = PackedWord::parse("[1,2,1]");
  for (auto _ : state)
    benchmark::DoNotOptimize(pword_product(a, b, TriOp::Star, PwordMethod::Shuffle));
}
BENCHMARK(BM_StarShuffleMethod);

void BM_StarIntervalMethod(benchmark::State& state) {
  PackedWord a = PackedWord::parse("[2,1,3]");
  PackedWord b = PackedWord::parse("[1,2,1]");
  for (auto _ : state)
    benchmark::DoNotOptimize(pword_product(a, b, TriOp::Star, PwordMethod::Interval));
}
BENCHMARK(BM_StarIntervalMethod);

void BM_ProjectionSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto words = enumerate_pwords(n);
  for (auto _ : state)
    for (auto& w : words) benchmark::DoNotOptimize(to_tree(w));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(words.size()));
}
BENCHMARK(BM_ProjectionSweep)->DenseRange(4, 6);

void BM_TreeStarRecursion(benchmark::State& state) {
  PlanarTree t = PlanarTree::parse("(. (. .) .)");
  PlanarTree z = PlanarTree::parse("((. .) (. . .))");
  for (auto _ : state)
    benchmark::DoNotOptimize(tree_product(t, z, TriOp::Star, TreeMethod::Recursion));
}
BENCHMARK(BM_TreeStarRecursion);

}  // namespace

BENCHMARK_MAIN();
