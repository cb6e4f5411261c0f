#include <benchmark/benchmark.h>

#include "tessera/classification.hpp"

namespace {

using namespace tessera;

void BM_ClassifyZ4Shaped(benchmark::State& state) {
  auto group = FiniteGroup::make(GroupName::Z4);
  ClassifyOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto report = classify(group, BasisConvention::LeftStandard, CandidateMode::Shaped, options);
    benchmark::DoNotOptimize(report.survivors.size());
  }
}
BENCHMARK(BM_ClassifyZ4Shaped)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassifyKleinRight(benchmark::State& state) {
  auto group = FiniteGroup::make(GroupName::Z2xZ2);
  for (auto _ : state) {
    auto report = classify(group, BasisConvention::RightStandard, CandidateMode::Shaped);
    benchmark::DoNotOptimize(report.survivors.size());
  }
}
BENCHMARK(BM_ClassifyKleinRight)->Unit(benchmark::kMillisecond);

void BM_EnumerateRawZ4(benchmark::State& state) {
  auto group = FiniteGroup::make(GroupName::Z4);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_candidates(group, BasisConvention::LeftStandard, CandidateMode::Raw).size());
}
BENCHMARK(BM_EnumerateRawZ4);

}  // namespace
