#include "orbitquant/catalog.hpp"
#include "orbitquant/characters.hpp"
#include "orbitquant/dominance.hpp"
#include "orbitquant/freudenthal.hpp"
#include "orbitquant/partition.hpp"

#include <benchmark/benchmark.h>

using namespace orbitquant;

namespace {

void BM_LsDual(benchmark::State& state) {
  Partition p = Partition::make({4, 4, 3, 3, 2, 2, 1, 1}, PartitionKind::C);
  for (auto _ : state) benchmark::DoNotOptimize(ls_dual(p));
}
BENCHMARK(BM_LsDual);

void BM_AlternatingSumRank3(benchmark::State& state) {
  Catalog cat = Catalog::builtin();
  Partition fam = family_partition(1, 1);
  CellCatalogEntry entry = cat.lookup(fam);
  const SubgroupSpec& spec = entry.spec_for(1);
  for (auto _ : state) benchmark::DoNotOptimize(r_x(spec.arrangement(), spec));
}
BENCHMARK(BM_AlternatingSumRank3);

// full 73728-element enumeration for the rank-10 orbit
void BM_AlternatingSumRank10(benchmark::State& state) {
  Catalog cat = Catalog::builtin();
  Partition orbit = Partition::make({4, 4, 3, 3, 2, 2, 1, 1}, PartitionKind::C);
  CellCatalogEntry entry = cat.lookup(orbit);
  const SubgroupSpec& spec = entry.spec_for(0);
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VirtualCharacter re = r_x(spec.arrangement(), spec, threads);
    benchmark::DoNotOptimize(support_maxima(re));
  }
}
BENCHMARK(BM_AlternatingSumRank10)->Arg(1)->Arg(4);

void BM_Decompose(benchmark::State& state) {
  Catalog cat = Catalog::builtin();
  Partition fam = family_partition(2, 1);
  VirtualCharacter xplus = unipotent_pair(fam, cat).first;
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MultiplicityCache cache;  // fresh tables each round, no memo carry-over
    benchmark::DoNotOptimize(decompose(xplus, bound, cache));
  }
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(6);

void BM_McGovern(benchmark::State& state) {
  Partition ones = Partition::make({1, 1, 1, 1, 1, 1}, PartitionKind::C);
  for (auto _ : state) benchmark::DoNotOptimize(mcgovern_character(ones));
}
BENCHMARK(BM_McGovern);

}  // namespace

BENCHMARK_MAIN();
