#include <benchmark/benchmark.h>

#include <cmath>

#include "parkfn/forest.hpp"
#include "parkfn/identities.hpp"
#include "parkfn/rotation.hpp"
#include "parkfn/sampler.hpp"

using namespace parkfn;

namespace {

static void BM_ValidityPredicate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = 2 * m;
  SplitMix64 rng(1);
  std::vector<int> t(static_cast<std::size_t>(m));
  for (int& v : t) v = rng.next_in_range(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_parking_function(t, {m, n}));
  }
}
BENCHMARK(BM_ValidityPredicate)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

static void BM_CountPf(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_pf(PFParams{m, m}));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(std::pow(m + 1, m)));
}
BENCHMARK(BM_CountPf)->Arg(4)->Arg(5)->Arg(6);

static void BM_ValidRotations(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = 2 * m;
  Params params(PFParams{m, n});
  SplitMix64 rng(2);
  std::vector<int> t(static_cast<std::size_t>(m));
  for (int& v : t) v = rng.next_in_range(n + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(valid_rotations(t, params));
  }
}
BENCHMARK(BM_ValidRotations)->Arg(50)->Arg(200)->Arg(800);

static void BM_SampleUniform(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Params params(PFParams{m, 2 * m});
  SplitMix64 rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_uniform(params, rng));
  }
}
BENCHMARK(BM_SampleUniform)->Arg(50)->Arg(200)->Arg(800);

static void BM_PhiRoundTrip(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Params params(PFParams{m, 2 * m});
  SplitMix64 rng(4);
  ParkingFunction pf = sample_uniform(params, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(phi_inv(pf)));
  }
}
BENCHMARK(BM_PhiRoundTrip)->Arg(64)->Arg(256);

static void BM_ClosedForm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form(IdentityId::MasterPf1, {.m = m, .n = m + 2}));
  }
}
BENCHMARK(BM_ClosedForm)->Arg(5)->Arg(10)->Arg(20);

static void BM_PolyMul(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  MultiPoly x = MultiPoly::variable(2, 0);
  MultiPoly y = MultiPoly::variable(2, 1);
  MultiPoly base = (x + y + MultiPoly::constant(2, 3)).pow(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(base * base);
  }
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
