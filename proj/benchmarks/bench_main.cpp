#include <benchmark/benchmark.h>

#include "tautilt/fan.hpp"
#include "tautilt/zoo.hpp"

using namespace tautilt;

static void BM_BuildLinearA4(benchmark::State& state) {
  auto pres = preset_linear_a(4);
  for (auto _ : state) {
    auto alg = build_algebra<Rat>(pres);
    benchmark::DoNotOptimize(alg->dim);
  }
}
BENCHMARK(BM_BuildLinearA4);

static void BM_ExploreLinearA(benchmark::State& state) {
  auto pres = preset_linear_a(int(state.range(0)));
  for (auto _ : state) {
    auto alg = build_algebra<Rat>(pres);
    MutationContext ctx(alg);
    auto g = explore(ctx, ctx.projective_pair(), 100000);
    benchmark::DoNotOptimize(g.node_count());
  }
}
BENCHMARK(BM_ExploreLinearA)->Arg(2)->Arg(3)->Arg(4);

static void BM_ExploreKronecker(benchmark::State& state) {
  auto pres = preset_kronecker();
  for (auto _ : state) {
    auto alg = build_algebra<Rat>(pres);
    MutationContext ctx(alg);
    auto g = explore(ctx, ctx.projective_pair(), int(state.range(0)));
    benchmark::DoNotOptimize(g.node_count());
  }
}
BENCHMARK(BM_ExploreKronecker)->Arg(11)->Arg(21)->Unit(benchmark::kMillisecond);

static void BM_MutateA3(benchmark::State& state) {
  auto alg = build_algebra<Rat>(preset_linear_a(3));
  MutationContext ctx(alg);
  auto p = ctx.projective_pair();
  for (auto _ : state) {
    auto q = ctx.mutate(p, 0);
    benchmark::DoNotOptimize(q.size());
  }
}
BENCHMARK(BM_MutateA3);

static void BM_ConeMembership(benchmark::State& state) {
  auto alg = build_algebra<Rat>(preset_linear_a(3));
  MutationContext ctx(alg);
  auto g = explore(ctx, ctx.projective_pair(), 100000);
  auto cone = node_cone(g, 0);
  auto theta = sample_direction(7, 3);
  for (auto _ : state) {
    auto pos = cone_membership(cone, theta);
    benchmark::DoNotOptimize(pos);
  }
}
BENCHMARK(BM_ConeMembership);

static void BM_CoverageA3(benchmark::State& state) {
  auto alg = build_algebra<Rat>(preset_linear_a(3));
  MutationContext ctx(alg);
  auto g = explore(ctx, ctx.projective_pair(), 100000);
  for (auto _ : state) {
    auto rep = coverage(g, 200, {}, 1);
    benchmark::DoNotOptimize(rep.inside);
  }
}
BENCHMARK(BM_CoverageA3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
