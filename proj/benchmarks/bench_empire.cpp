#include <benchmark/benchmark.h>

#include <random>

#include "empire/empire.hpp"

using namespace empire;

namespace {

CnfFormula random_3cnf(int n, int m, unsigned seed) {
  std::mt19937 rng(seed);
  CnfFormula f;
  f.num_vars = n;
  for (int c = 0; c < m; ++c) {
    std::vector<int> cl;
    for (int k = 0; k < 3; ++k) {
      const int v = 1 + static_cast<int>(rng() % n);
      cl.push_back(rng() % 2 ? v : -v);
    }
    f.clauses.push_back(cl);
  }
  return f;
}

void BM_Walecki(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(walecki(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Walecki)->Arg(10)->Arg(50)->Arg(200);

void BM_BuildA(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_A(r, 3, 8 * r));
}
BENCHMARK(BM_BuildA)->Arg(3)->Arg(6)->Arg(12);

void BM_ExactCliqueGadget(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const Artifact b = build_B(r, 2 * r - 1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_empire_colour(b.graph, 2 * r - 1));
}
BENCHMARK(BM_ExactCliqueGadget)->Arg(2)->Arg(3)->Arg(4);

void BM_Sat3ToLForestSolve(benchmark::State& state) {
  const CnfFormula f = random_3cnf(5, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    const Artifact a = sat3_to_lforest(f, 2);
    benchmark::DoNotOptimize(exact_empire_colour(a.graph, 3));
  }
}
BENCHMARK(BM_Sat3ToLForestSolve)->Arg(4)->Arg(8)->Arg(16);

void BM_FgToTreeSolve(benchmark::State& state) {
  const FormulaGraph fg = ksat_to_formula_graph(random_3cnf(5, static_cast<int>(state.range(0)), 11), 4, 3);
  for (auto _ : state) {
    const Artifact a = fg_to_tree(fg, 3);
    benchmark::DoNotOptimize(exact_empire_colour(a.graph, 4));
  }
}
BENCHMARK(BM_FgToTreeSolve)->Arg(4)->Arg(8);

void BM_Dpll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CnfFormula f = random_3cnf(n, static_cast<int>(4.26 * n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(dpll_solve(f));
}
BENCHMARK(BM_Dpll)->Arg(20)->Arg(40)->Arg(60);

void BM_MaxSubgraphDensity(benchmark::State& state) {
  std::mt19937 rng(5);
  const int n = static_cast<int>(state.range(0));
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() % 10 == 0) e.push_back({a, b});
  const Graph g(n, e);
  for (auto _ : state) benchmark::DoNotOptimize(max_subgraph_avg_degree(g));
}
BENCHMARK(BM_MaxSubgraphDensity)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
