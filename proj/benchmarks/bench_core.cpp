#include <benchmark/benchmark.h>

#include "wddt/model.hpp"
#include "wddt/simulate.hpp"
#include "wddt/statistic.hpp"

namespace {

wddt::SimConfig two_block_cell(std::size_t n) {
  wddt::SimConfig cfg;
  cfg.name = "bench";
  cfg.n = n;
  cfg.layers = 2;
  cfg.tau = {0.3, 0.2};
  cfg.family = wddt::WeightFamily::TwoBlock;
  cfg.r = 2.0;
  cfg.lambda = {0.8, 0.8};
  return cfg;
}

void BM_SampleGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const wddt::ModelSpec model = wddt::build_model(two_block_cell(n));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wddt::sample_rmhg(model, seed++));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n * (n - 1)));
}
BENCHMARK(BM_SampleGraph)->Arg(100)->Arg(300)->Arg(600);

void BM_Statistic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const wddt::ModelSpec model = wddt::build_model(two_block_cell(n));
  const wddt::MultilayerGraph g = wddt::sample_rmhg(model, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wddt::compute_wddt(g));
  }
}
BENCHMARK(BM_Statistic)->Arg(100)->Arg(300)->Arg(600);

void BM_Replication(benchmark::State& state) {
  wddt::SimConfig cfg = two_block_cell(300);
  cfg.replications = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wddt::simulate_statistics(cfg));
    ++cfg.seed;
  }
}
BENCHMARK(BM_Replication);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
