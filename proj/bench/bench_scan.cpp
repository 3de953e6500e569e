// Serial reference kernels vs their OpenMP twins on G(a(n); x) grids.
// Thread count follows OMP_NUM_THREADS / CHEB_SHARP_THREADS.

#include <benchmark/benchmark.h>

#include "chebsharp/inequalities.hpp"
#include "chebsharp/parallel.hpp"

namespace {

using namespace chebsharp;

ScalarFn sharp_g(int n) {
  const Degree d(n);
  const auto g = InequalityFn::g(d, sharp_constant_closed(d).value);
  return [g](double x) { return eval_ineq(g, x); };
}

void BM_SampleSerial(benchmark::State& st) {
  const auto f = sharp_g(64);
  const auto xs = uniform_theta_grid(-1.0, 1.0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sample_serial(f, xs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_SampleParallel(benchmark::State& st) {
  const auto f = sharp_g(64);
  const auto xs = uniform_theta_grid(-1.0, 1.0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sample_parallel(f, xs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_ArgminSerial(benchmark::State& st) {
  const auto xs = uniform_x_grid(-1.0, 1.0, static_cast<int>(st.range(0)));
  const auto vs = sample_serial(sharp_g(64), xs);
  for (auto _ : st) benchmark::DoNotOptimize(argmin_serial(xs, vs));
}

void BM_ArgminParallel(benchmark::State& st) {
  const auto xs = uniform_x_grid(-1.0, 1.0, static_cast<int>(st.range(0)));
  const auto vs = sample_serial(sharp_g(64), xs);
  for (auto _ : st) benchmark::DoNotOptimize(argmin_parallel(xs, vs));
}

void BM_VerifyTheorem1(benchmark::State& st) {
  const Degree n(static_cast<int>(st.range(0)));
  const auto g = InequalityFn::g(n, sharp_constant_closed(n).value);
  for (auto _ : st) benchmark::DoNotOptimize(verify_nonneg(g, -1, 1, default_grid(n)));
}

}  // namespace

BENCHMARK(BM_SampleSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_SampleParallel)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ArgminSerial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_ArgminParallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_VerifyTheorem1)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
