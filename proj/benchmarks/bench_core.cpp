#include <benchmark/benchmark.h>

#include <random>

#include "evst/background.hpp"
#include "evst/modal.hpp"
#include "evst/oracle.hpp"
#include "evst/symbols.hpp"
#include "evst/triangular.hpp"

using namespace evst;

namespace {

const PressureLaw kLaw{};
const ConstantBackground kSupersonic{1.0, 3.0, 1.0, 0.0, kLaw};

void BM_PrincipalSymbol(benchmark::State& state) {
  const BackgroundPoint bp = make_constant_background(kSupersonic);
  const Frequency f{0.2, 0.3, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(principal_symbol(bp.right, kLaw, Side::Right, f).m);
  }
}
BENCHMARK(BM_PrincipalSymbol);

void BM_ModeData(benchmark::State& state) {
  const BackgroundPoint bp = make_constant_background(kSupersonic);
  const Frequency f{0.2, 0.3, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mode_data(bp.right, kLaw, Side::Right, f).E);
  }
}
BENCHMARK(BM_ModeData);

void BM_LopatinskiiDirect(benchmark::State& state) {
  const BackgroundPoint bp = make_constant_background(kSupersonic);
  const Frequency f{0.2, 0.3, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lopatinskii_direct(bp, f));
  }
}
BENCHMARK(BM_LopatinskiiDirect);

void BM_LopatinskiiFactored(benchmark::State& state) {
  const BackgroundPoint bp = make_constant_background(kSupersonic);
  const Frequency f{0.2, 0.3, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lopatinskii_factored(bp, f).value);
  }
}
BENCHMARK(BM_LopatinskiiFactored);

void BM_OracleSubspace(benchmark::State& state) {
  const BackgroundPoint bp = make_constant_background(kSupersonic);
  const Frequency f{0.2, 0.3, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_stable_subspace(bp.right, kLaw, Side::Right, f));
  }
}
BENCHMARK(BM_OracleSubspace);

void BM_BuildAtilde(benchmark::State& state) {
  const BackgroundPoint bp = make_constant_background(kSupersonic);
  const Frequency f{0.2, 0.3, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_Atilde(bp.right, kLaw, Side::Right, f).Atilde);
  }
}
BENCHMARK(BM_BuildAtilde);

void BM_FindRoots(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_roots(kSupersonic).elastic.size());
  }
}
BENCHMARK(BM_FindRoots);

}  // namespace

BENCHMARK_MAIN();
