#include <benchmark/benchmark.h>

#include "facelat/facial_weak_order.hpp"
#include "facelat/generators.hpp"
#include "facelat/lattice.hpp"
#include "facelat/topology.hpp"

using namespace facelat;

namespace {

Arrangement by_index(std::int64_t k) { return k == 0 ? generate("A", 3) : generate("B", 3); }

void BM_EnumerateCovectors(benchmark::State& state) {
  const Arrangement arr = by_index(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_covectors(arr));
}
BENCHMARK(BM_EnumerateCovectors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FwoByIntervals(benchmark::State& state) {
  const ArrangementFaces faces(by_index(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fwo_by_intervals(faces));
}
BENCHMARK(BM_FwoByIntervals)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FwoByCovers(benchmark::State& state) {
  const ArrangementFaces faces(by_index(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fwo_by_covers(faces));
}
BENCHMARK(BM_FwoByCovers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IsLattice(benchmark::State& state) {
  const ArrangementFaces faces(by_index(state.range(0)));
  const FinitePoset fw = fwo_by_intervals(faces);
  for (auto _ : state) benchmark::DoNotOptimize(is_lattice(fw));
}
BENCHMARK(BM_IsLattice)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MobiusReport(benchmark::State& state) {
  const ArrangementFaces faces(generate("A", 3));
  const FinitePoset fw = fwo_by_intervals(faces);
  for (auto _ : state) benchmark::DoNotOptimize(mobius_report(faces, fw));
}
BENCHMARK(BM_MobiusReport)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
