#include <benchmark/benchmark.h>

#include "octic/arrangement.hpp"
#include "octic/incidence.hpp"

namespace {

const char* kArr1 =
    "field rational\n"
    "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
    "plane 1 1 0 0\nplane 0 1 1 0\nplane 0 0 1 1\nplane 1 0 0 1\n";

const char* kArr238 =
    "field rational\n"
    "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
    "plane 1 1 1 -1\nplane 1 1 -1 1\nplane 1 -1 1 1\nplane -1 1 1 1\n";

octic::IncidenceTable table_of(const char* text) {
  return octic::incidence_table(octic::parse_arrangement(text));
}

void BM_CanonicalForm25(benchmark::State& state) {
  octic::IncidenceTable table = table_of(kArr1);
  for (auto _ : state) benchmark::DoNotOptimize(octic::canonical_form(table));
}
BENCHMARK(BM_CanonicalForm25);

void BM_CanonicalForm12(benchmark::State& state) {
  octic::IncidenceTable table = table_of(kArr238);
  for (auto _ : state) benchmark::DoNotOptimize(octic::canonical_form(table));
}
BENCHMARK(BM_CanonicalForm12);

void BM_Stabilizer192(benchmark::State& state) {
  octic::IncidenceTable table = table_of(kArr238);
  for (auto _ : state) benchmark::DoNotOptimize(octic::symmetry_group(table));
}
BENCHMARK(BM_Stabilizer192);

void BM_Derive(benchmark::State& state) {
  octic::IncidenceTable table = table_of(kArr1);
  for (auto _ : state) benchmark::DoNotOptimize(octic::derive(table));
}
BENCHMARK(BM_Derive);

}  // namespace
