#include <benchmark/benchmark.h>

#include "strata/identities.hpp"

namespace {

using namespace strata;

void BM_HnfFromGenerators(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto stratum = enumerate_stratum(Composition({2, 1, 1}), p);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& l = stratum[i++ % stratum.size()];
    benchmark::DoNotOptimize(hnf_from_generators(l.matrix(6)));
  }
}
BENCHMARK(BM_HnfFromGenerators)->Arg(2)->Arg(3)->Arg(5);

void BM_StratumEnumeration(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const StratumEnumerator e(Composition({2, 1, 1}), p);
  for (auto _ : state) {
    std::uint64_t n = 0;
    e.for_each([&](const LatticeHNF& l) { n += static_cast<std::uint64_t>(l.colength()); });
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * e.size()));
}
BENCHMARK(BM_StratumEnumeration)->Arg(2)->Arg(3);

void BM_CartanType(benchmark::State& state) {
  const auto stratum = enumerate_stratum(Composition({2, 1, 1}), 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cartan_type(stratum[i++ % stratum.size()]));
}
BENCHMARK(BM_CartanType);

void BM_FiberFlags(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto bottom = LatticeHNF::diagonal(Composition({1, 1, 1}), p);
  for (auto _ : state) benchmark::DoNotOptimize(count_fiber_flags(bottom));
}
BENCHMARK(BM_FiberFlags)->Arg(2)->Arg(3)->Arg(5);

void BM_CellProfile(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(0));
  IdentityEngine engine(3, 2, 3, jobs);
  const Composition alpha({1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(engine.cell_profile(alpha));
}
BENCHMARK(BM_CellProfile)->Arg(1)->Arg(2)->UseRealTime();

void BM_StalkTable(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(StalkTable(4, d));
}
BENCHMARK(BM_StalkTable)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
