#include <benchmark/benchmark.h>
#include <omp.h>

#include "pell/elementary.hpp"
#include "pell/quadrature.hpp"

using namespace pell;

namespace {

// The K_4(0.7) integrand (1 - k^4 t^4)^(-3/4) (1 - t^4)^(-1/4).
Integrand quartic_integrand(Precision wp) {
  const Real k4 = pow(Real("0.7", wp), Real(4L, wp));
  return [k4](const Abscissa& n) {
    const Real t4 = pow(n.t, Real(4L, n.t.prec()));
    const Real one_minus = n.to_hi * (1 + n.t) * (1 + n.t * n.t);
    return 1 / (nth_root(pow(1 - k4 * t4, Real(3L, 64)), 4) * nth_root(one_minus, 4));
  };
}

template <bool kParallel>
void BM_Integrate(benchmark::State& state) {
  const PrecisionContext ctx(state.range(0));
  if constexpr (kParallel) omp_set_num_threads(static_cast<int>(state.range(1)));
  const Integrand f = quartic_integrand(ctx.working_bits());
  const Real lo(0L, ctx.working_bits());
  const Real hi(1L, ctx.working_bits());
  long evaluations = 0;
  for (auto _ : state) {
    const QuadResult r = kParallel ? integrate(f, lo, hi, ctx) : serial::integrate(f, lo, hi, ctx);
    evaluations = r.evaluations;
    benchmark::DoNotOptimize(r.value.get());
  }
  state.counters["evaluations"] = static_cast<double>(evaluations);
  state.counters["evals/s"] = benchmark::Counter(
      static_cast<double>(evaluations) * static_cast<double>(state.iterations()),
      benchmark::Counter::kIsRate);
}

void serial_args(benchmark::internal::Benchmark* b) {
  for (const long bits : {128L, 256L, 512L, 1024L}) b->Args({bits, 1});
}

void parallel_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (const long bits : {128L, 256L, 512L, 1024L}) {
    for (int threads = 1; threads <= max_threads; threads *= 2) b->Args({bits, threads});
    if ((max_threads & (max_threads - 1)) != 0) b->Args({bits, max_threads});
  }
}

}  // namespace

BENCHMARK(BM_Integrate<false>)
    ->Name("serial")
    ->Apply(serial_args)
    ->ArgNames({"bits", "threads"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Integrate<true>)
    ->Name("parallel")
    ->Apply(parallel_args)
    ->ArgNames({"bits", "threads"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
