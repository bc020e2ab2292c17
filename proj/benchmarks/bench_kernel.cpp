#include <benchmark/benchmark.h>

#include "lmc/cosets.hpp"
#include "lmc/normal.hpp"
#include "lmc/verify.hpp"

using namespace lmc;

namespace {

Context ctx_of(const benchmark::State& state) {
  return Context(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
}

void BM_Bracket(benchmark::State& state) {
  const Context ctx = ctx_of(state);
  Rng rng(1);
  const LieElement u = sample_element(ctx, rng), v = sample_element(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(u, v));
}

void BM_ToBasis(benchmark::State& state) {
  const Context ctx = ctx_of(state);
  Rng rng(2);
  const LieElement u = sample_element(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(to_basis(u));
}

void BM_Compose(benchmark::State& state) {
  const Context ctx = ctx_of(state);
  Rng rng(3);
  const Endomorphism a = sample_map(SampleKind::ia, ctx, rng), b = sample_map(SampleKind::ia, ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}

void BM_Invert(benchmark::State& state) {
  const Context ctx = ctx_of(state);
  Rng rng(4);
  const Endomorphism a = sample_map(SampleKind::ia, ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}

void BM_GInnCompose(benchmark::State& state) {
  const Context ctx = ctx_of(state);
  Rng rng(5);
  const GInnAut a = sample_ginn(ctx, rng), b = sample_ginn(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ginn_compose(a, b));
}

void BM_ReduceModIn(benchmark::State& state) {
  const Context ctx = ctx_of(state);
  Rng rng(6);
  const Endomorphism a = sample_map(SampleKind::ia, ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_mod_in(a));
}

void BM_ReduceModInn(benchmark::State& state) {
  const Context ctx = ctx_of(state);
  Rng rng(7);
  const GInnAut g = sample_ginn(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_mod_inn_normal(g));
}

void BM_DecideNormal(benchmark::State& state) {
  const Context ctx = ctx_of(state);
  Rng rng(8);
  const Endomorphism g = sample_map(SampleKind::ginn, ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(decide_normal(g));
}

void contexts(benchmark::internal::Benchmark* b) {
  b->Args({2, 3})->Args({3, 4})->Args({4, 5});
}

}  // namespace

BENCHMARK(BM_Bracket)->Apply(contexts);
BENCHMARK(BM_ToBasis)->Apply(contexts);
BENCHMARK(BM_Compose)->Apply(contexts);
BENCHMARK(BM_Invert)->Apply(contexts);
BENCHMARK(BM_GInnCompose)->Apply(contexts);
BENCHMARK(BM_ReduceModIn)->Args({3, 3})->Args({3, 4})->Args({4, 4});
BENCHMARK(BM_ReduceModInn)->Apply(contexts);
BENCHMARK(BM_DecideNormal)->Args({2, 3})->Args({3, 4});

BENCHMARK_MAIN();
