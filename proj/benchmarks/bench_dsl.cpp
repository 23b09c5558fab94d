#include <benchmark/benchmark.h>

#include "catloc/dsl.hpp"
#include "catloc/suite.hpp"

using namespace catloc;

static void BM_ParsePrint(benchmark::State& state) {
  const auto& docs = suite::builtin_documents();
  for (auto _ : state) {
    for (const auto& text : docs) benchmark::DoNotOptimize(dsl::print(dsl::parse(text)));
  }
}
BENCHMARK(BM_ParsePrint);

static void BM_RunBuiltins(benchmark::State& state) {
  std::vector<dsl::Document> docs;
  for (const auto& text : suite::builtin_documents()) docs.push_back(dsl::parse(text));
  dsl::RunOptions opts;
  opts.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    for (const auto& d : docs) benchmark::DoNotOptimize(dsl::run(d, opts));
  }
}
BENCHMARK(BM_RunBuiltins)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
