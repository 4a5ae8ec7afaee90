#include <benchmark/benchmark.h>

#include "resatlas/branching.hpp"
#include "resatlas/plancherel.hpp"
#include "resatlas/residuerep.hpp"

using namespace resatlas;

namespace {

void BM_WeylDim(benchmark::State& state) {
  GroupSpec spec{Family::Sp, 4};
  Weight mu = zero_weight(spec, Algebra::k);
  mu.coords[0] = 3;
  mu.coords[1] = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl_dim(spec, Algebra::k, mu));
  }
}
BENCHMARK(BM_WeylDim);

void BM_MhatSp(benchmark::State& state) {
  GroupSpec spec{Family::Sp, static_cast<long>(state.range(0))};
  KTypeParam tau{spec, RatVec(static_cast<size_t>(spec.n + 1), Rat(0))};
  tau.a[0] = 3;
  tau.a[1] = 2;
  tau.a[static_cast<size_t>(spec.n)] = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhat(spec, tau));
  }
}
BENCHMARK(BM_MhatSp)->Arg(2)->Arg(3)->Arg(4);

void BM_MhatF4(benchmark::State& state) {
  GroupSpec spec{Family::F4, 0};
  KTypeParam tau{spec, {Rat(3), Rat(2), Rat(1), Rat(1)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhat(spec, tau));
  }
}
BENCHMARK(BM_MhatF4);

void BM_DensityPoles(benchmark::State& state) {
  GroupSpec spec{Family::F4, 0};
  MTypeParam sigma{spec, {Rat(2), Rat(1), Rat(1)}, 1, 1, false};
  for (auto _ : state) {
    PlancherelDensity d = density(spec, sigma);
    benchmark::DoNotOptimize(poles(d, 32));
  }
}
BENCHMARK(BM_DensityPoles);

void BM_F4WeylOrbit(benchmark::State& state) {
  GroupSpec spec{Family::F4, 0};
  Weight chi1{{Rat(11, 2), Rat(5, 2), Rat(3, 2), Rat(1, 2)}, Algebra::g};
  Weight chi2{{Rat(1, 2), Rat(3, 2), Rat(5, 2), Rat(11, 2)}, Algebra::g};
  f4_weyl_group();  // build outside the loop
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl_orbit_equal(spec, chi1, chi2));
  }
}
BENCHMARK(BM_F4WeylOrbit);

void BM_GkCount(benchmark::State& state) {
  GroupSpec spec{Family::F4, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gk_count(spec, CaseLabel::north, 0, Rat(state.range(0))));
  }
}
BENCHMARK(BM_GkCount)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
