#include <benchmark/benchmark.h>

#include "perc/domination.hpp"
#include "perc/hitting.hpp"
#include "perc/local_law.hpp"

namespace {

// Cost of the subset-sum transform is 2^(2d) * 2d regardless of the law.
void BM_HittingProfile(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const perc::LocalLaw law = perc::make_iid(dim, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(perc::hitting_profile(law));
  }
  state.SetItemsProcessed(state.iterations() * law.mask_count());
}
BENCHMARK(BM_HittingProfile)->DenseRange(2, 8);

void BM_PairwiseCheck(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const perc::LocalLaw p = perc::make_iid(dim, 0.2);
  const perc::LocalLaw q = perc::make_dng(dim, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(perc::check_pairwise_domination(p, q));
  }
}
BENCHMARK(BM_PairwiseCheck)->DenseRange(2, 5);

}  // namespace
