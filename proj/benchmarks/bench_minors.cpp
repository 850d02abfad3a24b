#include <benchmark/benchmark.h>

#include "octic/arrangement.hpp"
#include "octic/expr.hpp"

namespace {

const char* kArr2 =
    "field rational\nparams\n"
    "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
    "plane 1 1 0 0\nplane 0 1 1 0\nplane 0 0 1 1\nplane A 0 0 B\n";

void BM_AllMinorsParametric(benchmark::State& state) {
  octic::Arrangement arr = octic::parse_arrangement(kArr2);
  for (auto _ : state) benchmark::DoNotOptimize(octic::all_minors(arr));
}
BENCHMARK(BM_AllMinorsParametric);

void BM_IncidenceTableGeneric(benchmark::State& state) {
  octic::Arrangement arr = octic::parse_arrangement(kArr2);
  for (auto _ : state) benchmark::DoNotOptimize(octic::incidence_table(arr));
}
BENCHMARK(BM_IncidenceTableGeneric);

void BM_Validate(benchmark::State& state) {
  octic::Arrangement arr = octic::parse_arrangement(kArr2);
  octic::ParamPoint at(octic::Scalar::of(7), octic::Scalar::of(3));
  for (auto _ : state) benchmark::DoNotOptimize(octic::validate(arr, at));
}
BENCHMARK(BM_Validate);

void BM_FactorQuartic(benchmark::State& state) {
  octic::FieldDesc f;
  octic::BinForm quartic =
      octic::parse_form("A*A*A*A-5*A*A*B*B+6*B*B*B*B", f, true);
  for (auto _ : state) benchmark::DoNotOptimize(octic::factor_binform(quartic));
}
BENCHMARK(BM_FactorQuartic);

}  // namespace
