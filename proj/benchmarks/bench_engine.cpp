#include <benchmark/benchmark.h>

#include "catloc/fixtures.hpp"

using namespace catloc;

static void BM_AbelianSkeleton(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fixtures::abelian_skeleton(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AbelianSkeleton)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_GroupSkeleton(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fixtures::group_skeleton(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GroupSkeleton)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CheckCategory(benchmark::State& state) {
  auto sk = fixtures::abelian_skeleton(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_category(*sk.category));
}
BENCHMARK(BM_CheckCategory)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_LocalizeAll(benchmark::State& state) {
  auto sk = fixtures::abelian_skeleton(8);
  auto fs = fixtures::enumerate_test_morphisms(*sk.category);
  for (auto _ : state) {
    std::size_t found = 0;
    for (Mor f : fs) found += build_localization(sk.category, f).has_value();
    benchmark::DoNotOptimize(found);
  }
  state.counters["morphisms"] = static_cast<double>(fs.size());
}
BENCHMARK(BM_LocalizeAll)->Unit(benchmark::kMillisecond);

static void BM_EilenbergMoore(benchmark::State& state) {
  auto sk = fixtures::abelian_skeleton(8);
  Monad t = fixtures::tensor_monad(sk, "Z/2");
  for (auto _ : state) benchmark::DoNotOptimize(eilenberg_moore(t));
}
BENCHMARK(BM_EilenbergMoore)->Unit(benchmark::kMillisecond);

static void BM_InducedOnPosets(benchmark::State& state) {
  auto posets = fixtures::all_posets(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t agree = 0;
    for (const auto& p : posets) {
      auto cat = fixtures::poset_category(p);
      auto ops = fixtures::closure_operators(p);
      for (const auto& t : ops) {
        EMCategory em = eilenberg_moore(fixtures::closure_monad(cat, t));
        for (const auto& l : ops) agree += induce_localization(em, fixtures::closure_localization(cat, l)).agree();
      }
    }
    benchmark::DoNotOptimize(agree);
  }
}
BENCHMARK(BM_InducedOnPosets)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Cellularization(benchmark::State& state) {
  auto sk = fixtures::abelian_skeleton(8);
  for (auto _ : state) {
    std::size_t found = 0;
    for (Obj a : sk.category->objects()) found += build_cellularization(sk.category, a).has_value();
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_Cellularization)->Unit(benchmark::kMillisecond);
