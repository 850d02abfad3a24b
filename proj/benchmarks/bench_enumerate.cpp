#include <benchmark/benchmark.h>

#include "octic/enumerate.hpp"

namespace {

void BM_ClosureFork(benchmark::State& state) {
  octic::EnumState seed;
  seed.quads = {octic::subsets::from_digits("1234"), octic::subsets::from_digits("1235"),
                octic::subsets::from_digits("2345")};
  for (auto _ : state) benchmark::DoNotOptimize(octic::closure(seed));
}
BENCHMARK(BM_ClosureFork);

void BM_ExpandInitial(benchmark::State& state) {
  octic::EnumState initial = octic::EnumState::initial();
  for (auto _ : state) benchmark::DoNotOptimize(octic::expand(initial));
}
BENCHMARK(BM_ExpandInitial);

void BM_EnumerateDepth3(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(octic::enumerate_classes(3, static_cast<size_t>(-1), 1));
}
BENCHMARK(BM_EnumerateDepth3);

}  // namespace
