#include <benchmark/benchmark.h>

#include "perc/exact_oracle.hpp"
#include "perc/local_law.hpp"

namespace {

void BM_ExactOneArmLine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const perc::LocalLaw law = perc::make_iid(1, 0.5);
  const auto sem = perc::EdgeSemantics::directed();
  for (auto _ : state) {
    benchmark::DoNotOptimize(perc::exact_one_arm(law, n, sem));
  }
}
BENCHMARK(BM_ExactOneArmLine)->DenseRange(1, 4)->ArgName("n");

void BM_ExactOneArmPlane(benchmark::State& state) {
  const perc::LocalLaw law = perc::make_iid(2, 0.5);
  const auto sem = perc::EdgeSemantics::directed();
  for (auto _ : state) {
    benchmark::DoNotOptimize(perc::exact_one_arm(law, 1, sem));
  }
}
BENCHMARK(BM_ExactOneArmPlane);

void BM_ExactBondOneArm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(perc::exact_bond_one_arm(0.5, 2, 1));
  }
}
BENCHMARK(BM_ExactBondOneArm);

}  // namespace
