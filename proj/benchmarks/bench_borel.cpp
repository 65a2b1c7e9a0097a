#include <borel/decompose.hpp>
#include <borel/duality.hpp>
#include <borel/homology.hpp>
#include <borel/polarize.hpp>
#include <borel/text.hpp>
#include <borel/verify.hpp>

#include <benchmark/benchmark.h>

using namespace borel;

namespace {

// Borel closure of x_n^k, the largest strongly stable ideal generated in degree k.
MonomialIdeal power_of_maximal(std::size_t n, Exponent k) {
  std::vector<Exponent> e(n, 0);
  e.back() = k;
  return borel_closure(std::vector<Monomial>{Monomial(e)}, n);
}

void BM_Decompose(benchmark::State& state) {
  const auto I = power_of_maximal(state.range(0), static_cast<Exponent>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_strongly_stable(I));
}
BENCHMARK(BM_Decompose)->Args({3, 3})->Args({4, 4})->Args({5, 4});

void BM_DecomposeOracle(benchmark::State& state) {
  const auto I = power_of_maximal(state.range(0), static_cast<Exponent>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_oracle(I));
}
BENCHMARK(BM_DecomposeOracle)->Args({3, 3})->Args({4, 4});

void BM_StarDual(benchmark::State& state) {
  const auto I = power_of_maximal(state.range(0), static_cast<Exponent>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(star_dual(I));
}
BENCHMARK(BM_StarDual)->Args({3, 3})->Args({4, 3});

void BM_BettiEK(benchmark::State& state) {
  const auto I = power_of_maximal(state.range(0), static_cast<Exponent>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ek_betti(I));
}
BENCHMARK(BM_BettiEK)->Args({3, 3})->Args({5, 4});

void BM_BettiOracle(benchmark::State& state) {
  const auto I = parse_ideal("x1^2, x1*x2, x1*x3, x2^2, x2*x3").ideal;
  for (auto _ : state) benchmark::DoNotOptimize(betti_oracle(bpol_ideal(I, 2)));
}
BENCHMARK(BM_BettiOracle);

void BM_VerifySuite(benchmark::State& state) {
  CorpusSpec spec;
  spec.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(spec));
}
BENCHMARK(BM_VerifySuite)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
