#include <benchmark/benchmark.h>

#include "matchlat/fixtures.hpp"
#include "matchlat/lattice.hpp"
#include "matchlat/matching.hpp"
#include "matchlat/planarity.hpp"
#include "matchlat/screen.hpp"
#include "matchlat/z_transform.hpp"

namespace {

using namespace matchlat;

void BM_EnumerateMatchingsGrid3x4(benchmark::State& state) {
  PlaneGraph g = fixtures::grid(3, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_perfect_matchings(g));
}
BENCHMARK(BM_EnumerateMatchingsGrid3x4);

void BM_MatchingLatticeCube(benchmark::State& state) {
  PlaneGraph g = fixtures::cube();
  for (auto _ : state) benchmark::DoNotOptimize(matching_lattice(g));
}
BENCHMARK(BM_MatchingLatticeCube);

void BM_FiltersDelta(benchmark::State& state) {
  Poset d = delta_poset();
  for (auto _ : state) benchmark::DoNotOptimize(filters(d));
}
BENCHMARK(BM_FiltersDelta);

void BM_SstarWitness(benchmark::State& state) {
  SimpleGraph s = fixtures::sstar();
  for (auto _ : state) benchmark::DoNotOptimize(kuratowski_witness(s));
}
BENCHMARK(BM_SstarWitness);

}  // namespace

BENCHMARK_MAIN();
