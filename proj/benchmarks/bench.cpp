#include "orbitlab/arrangement.hpp"
#include "orbitlab/genus.hpp"
#include "orbitlab/orbits_fq.hpp"
#include "orbitlab/shuffle.hpp"
#include "orbitlab/weyl.hpp"

#include <benchmark/benchmark.h>

using namespace orbitlab;

static void BM_split_total(benchmark::State& state) {
  const RootSystem rs = build_root_system(Type::B, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(split_total(rs, 11));
}
BENCHMARK(BM_split_total)->Arg(3)->Arg(5);

static void BM_p_of_all_subsets(benchmark::State& state) {
  const RootSystem rs = build_root_system(Type::D, static_cast<int>(state.range(0)));
  const ExtendedDiagram ext = marks(rs);
  for (auto _ : state) {
    Int total = 0;
    for (SubsetBits s : enumerate_proper_subsets(ext)) total += p_of(s, ext, 13);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_p_of_all_subsets)->Arg(4)->Arg(5);

static void BM_typeA_census(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(typeA_split_orbit_census(static_cast<int>(state.range(0)), 7));
}
BENCHMARK(BM_typeA_census)->Arg(4)->Arg(6);

static void BM_toral_census_B3(benchmark::State& state) {
  const RootSystem rs = build_root_system(Type::B, 3);
  const WeylGroup w = build_weyl(rs);
  for (auto _ : state) benchmark::DoNotOptimize(toral_orbit_census(rs, w, 5));
}
BENCHMARK(BM_toral_census_B3);

static void BM_intersection_lattice(benchmark::State& state) {
  const ReflectionArrangement ra =
      reflection_arrangement(build_root_system(Type::A, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_intersection_lattice(ra.arr));
}
BENCHMARK(BM_intersection_lattice)->Arg(3)->Arg(4);

static void BM_lattice_quotient_orbits(benchmark::State& state) {
  const RootSystem rs = build_root_system(Type::A, 3);
  const WeylGroup w = build_weyl(rs);
  const LatticeQuotient lq = build_lattice_quotient(rs, 5);
  for (auto _ : state) benchmark::DoNotOptimize(burnside_orbit_count(lq, w, rs));
}
BENCHMARK(BM_lattice_quotient_orbits);

static void BM_shuffle_sampler(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_inverse_shuffles(5, 4, state.range(0), 1));
}
BENCHMARK(BM_shuffle_sampler)->Arg(100000);

BENCHMARK_MAIN();
