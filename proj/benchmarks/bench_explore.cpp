#include <benchmark/benchmark.h>

#include "perc/exploration.hpp"
#include "perc/local_law.hpp"
#include "perc/rng.hpp"

namespace {

// One-arm exploration to radius n at parameter p/100; the regime (sub- or
// supercritical) dominates the cost, not the estimator around it.
void BM_ExploreOneArm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double p = static_cast<double>(state.range(1)) / 100.0;
  const perc::SamplingTable table(perc::make_iid(2, p));
  perc::Explorer explorer(2, n);
  const auto sem = perc::EdgeSemantics::directed();
  std::uint64_t sample = 0;
  std::int64_t sites = 0;
  for (auto _ : state) {
    const auto r = explorer.run(table, sem, {0x5eedu, sample++});
    sites += r.sites_sampled;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(sites);
}
BENCHMARK(BM_ExploreOneArm)
    ->ArgsProduct({{16, 32, 64}, {30, 50, 70}})
    ->ArgNames({"n", "p%"});

void BM_ExploreBond(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  perc::Explorer explorer(2, n);
  std::uint64_t sample = 0;
  std::int64_t sites = 0;
  for (auto _ : state) {
    const auto r = explorer.run_bond(0.5, {0x5eedu, sample++});
    sites += r.sites_sampled;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(sites);
}
BENCHMARK(BM_ExploreBond)->Arg(16)->Arg(32)->Arg(64)->ArgName("n");

}  // namespace
