#include <benchmark/benchmark.h>

#include "hamvt/analysis.hpp"
#include "hamvt/catalog.hpp"
#include "hamvt/corpus.hpp"
#include "hamvt/coset_action.hpp"
#include "hamvt/gf2k.hpp"
#include "hamvt/hamilton.hpp"
#include "hamvt/perm_group.hpp"

using namespace hamvt;

static void BM_CycleSearch(benchmark::State& state, const char* name) {
  Graph x = catalog(name);
  SearchOptions opt;
  opt.allow_dp = false;
  for (auto _ : state) benchmark::DoNotOptimize(find_hamilton_cycle(x, opt).nodes);
}
BENCHMARK_CAPTURE(BM_CycleSearch, coxeter, "coxeter");
BENCHMARK_CAPTURE(BM_CycleSearch, truncated_petersen, "truncated_petersen");
BENCHMARK_CAPTURE(BM_CycleSearch, truncated_coxeter, "truncated_coxeter");

static void BM_SubsetDp(benchmark::State& state) {
  Graph x = catalog("petersen");
  for (auto _ : state) benchmark::DoNotOptimize(find_hamilton_cycle(x).status);
}
BENCHMARK(BM_SubsetDp);

static void BM_SchreierSims(benchmark::State& state) {
  auto gens = psl2_16_generators();
  for (auto _ : state) {
    PermGroup g(17, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSims);

static void BM_CosetAction(benchmark::State& state) {
  auto fx = fixture("psl2_16_gens");
  for (auto _ : state) benchmark::DoNotOptimize(CosetAction(*fx.group, fx.subgroup).degree());
}
BENCHMARK(BM_CosetAction);

static void BM_CountEq2(benchmark::State& state) {
  Field f(static_cast<unsigned>(state.range(0)));
  const auto m = quad_irreducible_m(f);
  for (auto _ : state) benchmark::DoNotOptimize(count_eq2(f, m, f.theta_pow(1), false));
}
BENCHMARK(BM_CountEq2)->Arg(4)->Arg(6)->Arg(8);

static void BM_CountEq2ByTrace(benchmark::State& state) {
  Field f(static_cast<unsigned>(state.range(0)));
  const auto m = quad_irreducible_m(f);
  for (auto _ : state) benchmark::DoNotOptimize(count_eq2_by_trace(f, m, f.theta_pow(1), false));
}
BENCHMARK(BM_CountEq2ByTrace)->Arg(8)->Arg(12)->Arg(16);

static void BM_AnalyzeTruncatedPetersen(benchmark::State& state) {
  auto e = catalog_entry("truncated_petersen");
  PermGroup g(e.graph.order(), e.automorphisms);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(e.graph, g).result);
}
BENCHMARK(BM_AnalyzeTruncatedPetersen);

BENCHMARK_MAIN();
