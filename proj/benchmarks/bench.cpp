#include <benchmark/benchmark.h>

#include "repcheck/adequacy.hpp"
#include "repcheck/catalog.hpp"

using namespace repcheck;

static void BM_mat_mul(benchmark::State& state) {
  auto F = FieldCtx::make(5, 1);
  int n = int(state.range(0));
  Mat a(F, n, n), b(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.at(i, j) = felt((i * 7 + j * 3 + 1) % 5);
      b.at(i, j) = felt((i * 2 + j * 11 + 2) % 5);
    }
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul(a, b));
}
BENCHMARK(BM_mat_mul)->Arg(16)->Arg(64);

static void BM_enumerate_sl2_9(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(make_group("sl2", {{"q", "9"}}));
}
BENCHMARK(BM_enumerate_sl2_9);

static void BM_h1_sl2_5_adq_natural(benchmark::State& state) {
  auto inst = make_group("sl2", {{"q", "5"}});
  Rep adq = rep_adq(inst.get("natural"));
  for (auto _ : state) benchmark::DoNotOptimize(h1(adq));
}
BENCHMARK(BM_h1_sl2_5_adq_natural);

static void BM_ext1_self_sl2_5_L1(benchmark::State& state) {
  auto inst = make_group("sl2", {{"q", "5"}});
  const Rep& l1 = inst.get("L1");
  for (auto _ : state) benchmark::DoNotOptimize(ext1(l1, l1));
}
BENCHMARK(BM_ext1_self_sl2_5_L1);

static void BM_chop_ad_sl3_2(benchmark::State& state) {
  auto inst = make_group("sln_natural", {{"n", "3"}, {"q", "2"}});
  Rep ad = rep_ad(inst.get("natural"));
  for (auto _ : state) benchmark::DoNotOptimize(chop(ad));
}
BENCHMARK(BM_chop_ad_sl3_2);

BENCHMARK_MAIN();
