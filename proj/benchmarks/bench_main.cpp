#include <benchmark/benchmark.h>

#include <string>

#include "c1p/graph.hpp"
#include "c1p/multiset.hpp"
#include "c1p/pqtree.hpp"
#include "c1p/pqtree_io.hpp"
#include "c1p/reduction.hpp"

using namespace c1p;

namespace {

// A P-node over n distinct leaves next to a Q-node of three, so the frontier
// set has 2 * (n + 1)! members.
PqTree mixed_tree(int n) {
  std::string s = "(P";
  for (int i = 0; i < n; ++i) s += " x" + std::to_string(i);
  s += " (Q a b c))";
  return parse_sexpr(s);
}

// Q-root tree with repeated labels; exercises the counter that never lists
// the root's arrangements.
PqTree repeated_q_tree(int n) {
  std::string s = "(Q";
  for (int i = 0; i < n; ++i) s += " (P a a b c)";
  s += ")";
  return parse_sexpr(s);
}

HamInstance graph(const char* text) { return parse_graph_file(text); }

const char* kDiamond = "4 5 1 4\n1 2\n1 3\n2 3\n2 4\n3 4\n";
const char* kK4Pendant = "5 7 1 5\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5\n";
const char* kComplete6 = "6 15 1 6\n1 2\n1 3\n1 4\n1 5\n1 6\n2 3\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n4 5\n4 6\n5 6\n";

}  // namespace

static void BM_EnumerateFrontiers(benchmark::State& state) {
  const PqTree t = mixed_tree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_frontiers(t));
  state.counters["frontiers"] = static_cast<double>(enumerate_frontiers(t).strings.size());
}
BENCHMARK(BM_EnumerateFrontiers)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_CountDistinctFormula(benchmark::State& state) {
  const PqTree t = mixed_tree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_frontiers_distinct(t));
}
BENCHMARK(BM_CountDistinctFormula)->Arg(6)->Arg(50);

static void BM_CountQRoot(benchmark::State& state) {
  const PqTree t = repeated_q_tree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_frontiers_multiset(t));
}
BENCHMARK(BM_CountQRoot)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

static void BM_Fmo(benchmark::State& state, FmoEngine engine) {
  const FmoInstance inst = build_fmo_instance(graph("2 1 1 2\n1 2\n"));
  for (auto _ : state) benchmark::DoNotOptimize(count_fmo(inst, engine));
}
BENCHMARK_CAPTURE(BM_Fmo, naive_edge, FmoEngine::Naive)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Fmo, pruned_edge, FmoEngine::Pruned)->Unit(benchmark::kMillisecond);

static void BM_FmoPrunedDiamond(benchmark::State& state) {
  const FmoInstance inst = build_fmo_instance(graph(kDiamond));
  for (auto _ : state) benchmark::DoNotOptimize(count_fmo(inst, FmoEngine::Pruned));
}
BENCHMARK(BM_FmoPrunedDiamond)->Unit(benchmark::kMillisecond);

static void BM_BruteForceHam(benchmark::State& state, const char* text) {
  const HamInstance inst = graph(text);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ham(inst));
}
BENCHMARK_CAPTURE(BM_BruteForceHam, k4_pendant, kK4Pendant);
BENCHMARK_CAPTURE(BM_BruteForceHam, complete6, kComplete6);

static void BM_HamViaFront(benchmark::State& state) {
  const HamInstance inst = graph(kDiamond);
  for (auto _ : state) benchmark::DoNotOptimize(count_ham_via_front(inst));
}
BENCHMARK(BM_HamViaFront)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
