#include <benchmark/benchmark.h>

#include <cstdint>

#include "stanley/count_table.hpp"
#include "stanley/partition.hpp"
#include "stanley/report.hpp"
#include "stanley/stats.hpp"
#include "stanley/verify.hpp"

namespace {

void BM_CountTableBuild(benchmark::State& state) {
  const std::int64_t max_n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stanley::build_count_table(max_n));
  }
  state.SetItemsProcessed(state.iterations() * max_n);
}
BENCHMARK(BM_CountTableBuild)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PfuncOracle(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stanley::pfunc_oracle(n));
  }
}
BENCHMARK(BM_PfuncOracle)->Arg(128)->Arg(512);

void BM_EnumeratePartitions(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::int64_t items = 0;
  for (auto _ : state) {
    for (const stanley::Partition& p : stanley::partitions_of(n)) {
      benchmark::DoNotOptimize(p.parts().data());
      ++items;
    }
  }
  state.SetItemsProcessed(items);
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30)->Arg(40);

void BM_OccurrencesEnumerated(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stanley::occurrences_enumerated(1, m));
  }
}
BENCHMARK(BM_OccurrencesEnumerated)->Arg(20)->Arg(30);

void BM_Theorem1Formula(benchmark::State& state) {
  stanley::CampaignConfig cfg;
  cfg.n_max = state.range(0);
  cfg.oracle_mode = stanley::OracleMode::formula_only;
  cfg.parallelism = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stanley::verify_theorem1(cfg));
  }
}
BENCHMARK(BM_Theorem1Formula)->Arg(30)->Arg(60)->Arg(120);

void BM_TilingTransport(benchmark::State& state) {
  stanley::CampaignConfig cfg;
  cfg.n_max = state.range(0);
  cfg.set_budget = state.range(0);
  cfg.parallelism = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        stanley::verify_tiling_lemmas(stanley::Identity::lemma21, cfg));
  }
}
BENCHMARK(BM_TilingTransport)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
