#include <memory>

#include <benchmark/benchmark.h>

#include "ultrameasure/convolve.hpp"
#include "ultrameasure/random.hpp"
#include "ultrameasure/rep.hpp"
#include "ultrameasure/tower.hpp"
#include "ultrameasure/verify.hpp"

namespace um = ultrameasure;

namespace {

um::GroupPtr group_for(int which) {
  switch (which) {
    case 0: return std::make_shared<const um::FiniteGroup>(um::FiniteGroup::cyclic(3, 3));
    case 1: return std::make_shared<const um::FiniteGroup>(um::FiniteGroup::heisenberg(3, 1));
    default: return std::make_shared<const um::FiniteGroup>(um::FiniteGroup::cyclic(3, 5));
  }
}

void BM_ConvolveMeasures(benchmark::State& state) {
  auto g = group_for(static_cast<int>(state.range(0)));
  um::Rng rng(1);
  auto whole = um::Subgroup::whole(g);
  auto nu = um::random_measure(rng, whole, 5);
  auto mu = um::random_measure(rng, whole, 5);
  for (auto _ : state) benchmark::DoNotOptimize(um::convolve_measures(nu, mu));
  state.SetLabel(g->name());
}
BENCHMARK(BM_ConvolveMeasures)->Arg(0)->Arg(1)->Arg(2);

void BM_Star(benchmark::State& state) {
  auto g = group_for(static_cast<int>(state.range(0)));
  um::Rng rng(2);
  auto mc = std::make_shared<const um::MeasuredChain>(
      um::random_measured_chain(rng, um::SubgroupChain::standard(g), 5));
  auto f = um::random_tower(rng, mc, 5);
  auto h = um::random_tower(rng, mc, 5);
  for (auto _ : state) benchmark::DoNotOptimize(um::star(f, h));
  state.SetLabel(g->name());
}
BENCHMARK(BM_Star)->Arg(0)->Arg(1)->Arg(2);

void BM_AlgebraNorm(benchmark::State& state) {
  auto g = group_for(static_cast<int>(state.range(0)));
  um::Rng rng(3);
  auto mc = std::make_shared<const um::MeasuredChain>(
      um::random_measured_chain(rng, um::SubgroupChain::standard(g), 5));
  auto f = um::random_tower(rng, mc, 5);
  for (auto _ : state) benchmark::DoNotOptimize(um::algebra_norm(f, 5));
  state.SetLabel(g->name());
}
BENCHMARK(BM_AlgebraNorm)->Arg(0)->Arg(1);

void BM_WeightedFamily(benchmark::State& state) {
  auto g = group_for(static_cast<int>(state.range(0)));
  um::Rng rng(4);
  auto mu = um::random_measure(rng, um::Subgroup::whole(g), 5);
  for (auto _ : state) benchmark::DoNotOptimize(um::weighted_family(mu));
  state.SetLabel(g->name());
}
BENCHMARK(BM_WeightedFamily)->Arg(0)->Arg(1);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(um::run_verify(um::Suite::all, 7, state.range(0)));
}
BENCHMARK(BM_VerifyAll)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
