#include <benchmark/benchmark.h>

#include <random>

#include "tessera/algebra.hpp"
#include "tessera/determinant.hpp"
#include "tessera/identities.hpp"
#include "tessera/norms.hpp"

namespace {

using namespace tessera;

AlgebraElement random_element(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> d(-50, 50);
  RationalVector v;
  for (int i = 0; i < dim; ++i) v.emplace_back(d(rng), 1 + (d(rng) & 7));
  return AlgebraElement(v);
}

void BM_TesseranionProduct(benchmark::State& state) {
  auto t = algebras::tesseranions();
  std::mt19937 rng(1);
  auto x = random_element(rng, 4), y = random_element(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(t.product(x, y));
}
BENCHMARK(BM_TesseranionProduct);

void BM_ModularProduct(benchmark::State& state) {
  auto t = algebras::tesseranions(ScalarRing::mod_p(257));
  AlgebraElement x{12, 200, 7, 99}, y{3, 1, 250, 64};
  for (auto _ : state) benchmark::DoNotOptimize(t.product(x, y));
}
BENCHMARK(BM_ModularProduct);

void BM_QuarticNorm(benchmark::State& state) {
  std::mt19937 rng(2);
  auto x = random_element(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(quartic_norm4(x));
}
BENCHMARK(BM_QuarticNorm);

// Symbolic determinant of the left multiplication matrix, one group per size.
void BM_SymbolicDetLeft(benchmark::State& state) {
  static const GroupName groups[] = {GroupName::Z2, GroupName::Z4, GroupName::Z2xZ2xZ2};
  auto group = FiniteGroup::make(groups[state.range(0)]);
  std::vector<std::vector<Rational>> ones(static_cast<std::size_t>(group.order()),
                                         std::vector<Rational>(static_cast<std::size_t>(group.order()), 1));
  auto c = StructureConstant::from_rows(group, ones, BasisConvention::LeftStandard);
  for (auto _ : state) benchmark::DoNotOptimize(det_left(c));
  state.SetLabel(std::string(group_name_string(group.name())));
}
BENCHMARK(BM_SymbolicDetLeft)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_IdentitySpace(benchmark::State& state) {
  static const char* patterns[] = {"2,1", "4", "2,2", "5", "6"};
  auto t = algebras::tesseranions();
  auto p = DegreePattern::parse(patterns[state.range(0)]);
  std::size_t dim = 0;
  for (auto _ : state) dim = identity_space(t, p).dimension();
  state.SetLabel(std::string(patterns[state.range(0)]) + " dim " + std::to_string(dim));
}
BENCHMARK(BM_IdentitySpace)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

}  // namespace
