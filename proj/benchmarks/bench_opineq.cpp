// Microbenchmarks for the hot kernels: the Jacobi eigensolver, spectral
// powers, the discrete averaging checker, step-function quadrature and the
// two geometric-mean evaluations. Inputs are fixed-seed so numbers are
// comparable across runs and machines.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "opineq/eigh.hpp"
#include "opineq/means.hpp"
#include "opineq/probe.hpp"
#include "opineq/rng.hpp"
#include "opineq/sequence.hpp"
#include "opineq/spectral.hpp"
#include "opineq/step_function.hpp"
#include "opineq/sym_matrix.hpp"
#include "opineq/verify.hpp"

namespace {

using namespace opineq;

void BM_Eigh(benchmark::State& state) {
  Rng rng(1);
  const SymMatrix a = random_spd(static_cast<int>(state.range(0)), 1e-3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigh(a));
  }
}
BENCHMARK(BM_Eigh)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_MatrixPower(benchmark::State& state) {
  Rng rng(2);
  const SymMatrix a = random_spd(static_cast<int>(state.range(0)), 1e-3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(power(a, 1.7));
  }
}
BENCHMARK(BM_MatrixPower)->Arg(4)->Arg(8)->Arg(16);

OperatorSequence bench_sequence(int dim, int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SymMatrix> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    terms.push_back(random_psd(dim, rng.uniform_int(1, dim), rng));
  }
  return OperatorSequence(std::move(terms));
}

void BM_DiscreteHardy(benchmark::State& state) {
  const OperatorSequence a =
      bench_sequence(4, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_discrete_hardy(a, 1.5));
  }
}
BENCHMARK(BM_DiscreteHardy)->Arg(8)->Arg(32)->Arg(64);

void BM_TracialHardy(benchmark::State& state) {
  const OperatorSequence a =
      bench_sequence(4, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_tracial_hardy(a, 4.0));
  }
}
BENCHMARK(BM_TracialHardy)->Arg(32);

StepOperatorFunction bench_step(int dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> bp{0.5};
  std::vector<SymMatrix> values;
  for (int s = 0; s < 4; ++s) {
    bp.push_back(bp.back() + rng.uniform(0.2, 1.5));
    values.push_back(random_psd(dim, rng.uniform_int(1, dim), rng));
  }
  return StepOperatorFunction(std::move(bp), std::move(values));
}

void BM_IntegralAvgPower(benchmark::State& state) {
  const StepOperatorFunction g = bench_step(3, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integral_avg_power(g, 1.5, Weight::DX));
  }
}
BENCHMARK(BM_IntegralAvgPower);

std::vector<SymMatrix> bench_tuple(int dim, int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SymMatrix> tuple;
  tuple.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tuple.push_back(random_spd(dim, 1e-2, rng));
  return tuple;
}

void BM_TgLogexp(benchmark::State& state) {
  const std::vector<SymMatrix> tuple = bench_tuple(4, 4, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg_logexp(tuple));
  }
}
BENCHMARK(BM_TgLogexp);

void BM_TgLimit(benchmark::State& state) {
  const std::vector<SymMatrix> tuple = bench_tuple(4, 4, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg_limit(tuple));
  }
}
BENCHMARK(BM_TgLimit);

void BM_ExtremalFamily(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremal_family_ratio(2.0, state.range(0)));
  }
}
BENCHMARK(BM_ExtremalFamily)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
