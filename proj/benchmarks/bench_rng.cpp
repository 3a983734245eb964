#include <benchmark/benchmark.h>

#include "perc/rng.hpp"

namespace {

void BM_PhiloxBlock(benchmark::State& state) {
  perc::rng::Counter c{{0, 0, 0, 0}};
  const perc::rng::Key k{{0xdeadbeefu, 0xcafef00du}};
  for (auto _ : state) {
    c.v[0]++;
    benchmark::DoNotOptimize(perc::rng::philox4x32(c, k));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxBlock);

void BM_SiteUniform(benchmark::State& state) {
  const perc::rng::SampleStream stream{0x9e3779b97f4a7c15ull, 42};
  std::uint32_t site = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stream.site_uniform(site++, 0));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SiteUniform);

}  // namespace

BENCHMARK_MAIN();
