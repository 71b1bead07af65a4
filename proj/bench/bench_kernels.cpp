#include <random>

#include <benchmark/benchmark.h>

#include "qdt/dt.hpp"
#include "qdt/kernels.hpp"
#include "qdt/series.hpp"

using namespace qdt;

namespace {

TruncatedSeries sample(int side, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3), expo(-6, 6);
  TruncatedSeries s({side, side});
  for (const auto& d : nonzero_vectors_below({side, side})) {
    s.set(d, RationalMotive::fraction(LaurentPoly::monomial(coef(rng), expo(rng)) + 1, LaurentPoly::v(2 * d.total()) - 1));
  }
  return s;
}

Exec mode(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

void BM_Convolve(benchmark::State& st) {
  const auto a = sample(static_cast<int>(st.range(0)), 1);
  const auto b = sample(static_cast<int>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(mul(a, b, mode(st)));
}

void BM_PlethysticExp(benchmark::State& st) {
  const auto a = sample(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(plethystic_exp(a, mode(st)));
}

void BM_PlethysticLog(benchmark::State& st) {
  const auto g = plethystic_exp(sample(static_cast<int>(st.range(0)), 4), Exec::serial);
  for (auto _ : st) benchmark::DoNotOptimize(plethystic_log(g, mode(st)));
}

void BM_DtSymmetric(benchmark::State& st) {
  const Quiver q({{2, 1}, {1, 1}});
  const int side = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(dt_series(q, std::nullopt, std::nullopt, {side, side}, mode(st)));
}

}  // namespace

// Second argument: 0 serial reference, 1 OpenMP.
BENCHMARK(BM_Convolve)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlethysticExp)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlethysticLog)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DtSymmetric)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
