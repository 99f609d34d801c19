#include <benchmark/benchmark.h>

#include "hopfrep/algebra/table.hpp"
#include "hopfrep/catalog/catalog.hpp"
#include "hopfrep/extquiver/extquiver.hpp"
#include "hopfrep/modules/operations.hpp"

using namespace hopfrep;

static void BM_BuildTable(benchmark::State& st) {
  auto d = a_datum(static_cast<int>(st.range(0)));
  auto basis = a3_candidate_basis(*d);
  for (auto _ : st) benchmark::DoNotOptimize(build_table(d, basis, 10000).dim());
}
BENCHMARK(BM_BuildTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Ext1Table(benchmark::State& st) {
  auto s = simples(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    std::size_t total = 0;
    for (const auto& a : s)
      for (const auto& b : s) total += ext1_dim(a.module, b.module);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_Ext1Table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_IsomorphismProjectives(benchmark::State& st) {
  auto p = projectives(1);
  for (auto _ : st) benchmark::DoNotOptimize(is_isomorphic(p[2].module, p[3].module));
}
BENCHMARK(BM_IsomorphismProjectives)->Unit(benchmark::kMillisecond);

static void BM_TensorDecompose(benchmark::State& st) {
  auto s = simples(1);
  for (auto _ : st) benchmark::DoNotOptimize(decompose(tensor(s[2].module, s[4].module)).summands.size());
}
BENCHMARK(BM_TensorDecompose)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
