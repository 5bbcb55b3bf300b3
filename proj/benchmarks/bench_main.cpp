#include <benchmark/benchmark.h>

#include "flagprim/chars.hpp"
#include "flagprim/flagorbit.hpp"
#include "flagprim/primcheck.hpp"
#include "flagprim/quiver.hpp"
#include "flagprim/sep.hpp"

using namespace flagprim;

namespace {

Weight fund(int r, int i, int m = 1) {
  Weight w(r, 0);
  w[i - 1] = m;
  return w;
}

void BM_Freudenthal(benchmark::State& st) {
  auto R = root_system(st.range(0) ? "E6" : "B4");
  Weight w(R->rank(), 1);
  for (auto _ : st) benchmark::DoNotOptimize(freudenthal(*R, w));
}
BENCHMARK(BM_Freudenthal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TensorE6(benchmark::State& st) {
  auto R = root_system("E6");
  const int s = static_cast<int>(st.range(0));
  for (auto _ : st) {
    clear_char_cache();
    benchmark::DoNotOptimize(tensor_decompose(*R, fund(6, 1, s), fund(6, 1, s)));
  }
}
BENCHMARK(BM_TensorE6)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_E6Fastpath(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(e6_fastpath(20, 20));
}
BENCHMARK(BM_E6Fastpath);

void BM_SepIndex(benchmark::State& st) {
  static const char* names[] = {"A2", "G2", "B3"};
  auto R = root_system(names[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(sep_index(*R));
}
BENCHMARK(BM_SepIndex)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CanonicalDecomposition(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  DimVector g{n, n / 2, n / 2, n / 2, n / 2};
  for (auto _ : st) benchmark::DoNotOptimize(canonical_decomposition(4, g));
}
BENCHMARK(BM_CanonicalDecomposition)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_FlagOrbit(benchmark::State& st) {
  auto R = root_system("C4");
  for (auto _ : st) benchmark::DoNotOptimize(open_orbit_flags(*R, {{1}, {1}, {1}}, 20, 42));
}
BENCHMARK(BM_FlagOrbit)->Unit(benchmark::kMillisecond);

void BM_CheckPrimitiveWitness(benchmark::State& st) {
  auto R = root_system("E6");
  std::vector<Weight> w{fund(6, 1, 4), fund(6, 1, 4), fund(6, 1, 3)};
  Weight mu{1, 0, 3, 0, 1, 0};
  CheckOptions o;
  o.search_bound = 3;
  for (auto _ : st) benchmark::DoNotOptimize(check_primitive_at(*R, w, mu, o));
}
BENCHMARK(BM_CheckPrimitiveWitness)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
