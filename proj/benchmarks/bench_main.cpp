#include <benchmark/benchmark.h>

#include "support/generators.hpp"
#include "qvl/qvl.hpp"

namespace {

using namespace qvl;

void BM_RankPrime(benchmark::State& state) {
  const PrimeField k(101);
  testing::Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = testing::random_matrix(k, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankPrime)->Arg(16)->Arg(64)->Arg(128);

void BM_KernelRational(benchmark::State& state) {
  const RationalField q;
  testing::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = testing::random_matrix(q, n, n + 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelRational)->Arg(8)->Arg(24);

void BM_CocycleBasis(benchmark::State& state) {
  const PrimeField k(3);
  testing::Rng rng(3);
  const auto pres = build_family(FamilyDescriptor::a(2, 3, 2));
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto u = testing::random_valid_representation(pres, k, {d, d}, rng);
  const auto v = testing::random_valid_representation(pres, k, {d, d}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_space_basis(u, v));
}
BENCHMARK(BM_CocycleBasis)->Arg(2)->Arg(4);

void BM_CountNilpotent(benchmark::State& state) {
  EnumerationTask task;
  task.presentation = build_family(FamilyDescriptor::lambda(3));
  task.dims = {static_cast<std::size_t>(state.range(0))};
  task.q = 3;
  for (auto _ : state) benchmark::DoNotOptimize(count_points(task));
}
BENCHMARK(BM_CountNilpotent)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
