#include <fusionring/catalog.hpp>
#include <fusionring/criteria.hpp>
#include <fusionring/integrality.hpp>
#include <fusionring/lattice.hpp>
#include <fusionring/spectra.hpp>

#include <benchmark/benchmark.h>

using namespace fusionring;

namespace {

void BM_CharacterTable(benchmark::State& state, const char* name) {
  PrecisionScope scope(256);
  const FusionRing ring = catalog(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(character_table(ring));
  }
}
BENCHMARK_CAPTURE(BM_CharacterTable, fibonacci, "fibonacci");
BENCHMARK_CAPTURE(BM_CharacterTable, fib_x_cyclic_5, "fib_x_cyclic_5");
BENCHMARK_CAPTURE(BM_CharacterTable, cyclic_12, "cyclic_12");

void BM_LpwScan(benchmark::State& state) {
  PrecisionScope scope(256);
  const FusionRing ring = catalog("fib_x_cyclic_5");
  const Spectrum sp = character_table(ring);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpw_positivity(ring, sp, n));
  }
}
BENCHMARK(BM_LpwScan)->Arg(3)->Arg(4);

void BM_Lll(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<IntVector> basis(n, IntVector(n + 1, 0));
  for (std::size_t k = 0; k < n; ++k) {
    basis[k][k] = 1;
    basis[k][n] = Integer(static_cast<long>(rng() >> 4)) * Integer(static_cast<long>(rng() >> 4));
  }
  for (auto _ : state) {
    auto b = basis;
    lll_reduce(b);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_Lll)->Arg(4)->Arg(8)->Arg(12);

void BM_MinimalPolynomial(benchmark::State& state) {
  const unsigned bits = static_cast<unsigned>(state.range(0));
  PrecisionScope scope(bits);
  long salt = 0;
  for (auto _ : state) {
    // vary the value so the result cache does not short-circuit the search
    const Real v = boost::multiprecision::sqrt(Real(2)) + boost::multiprecision::sqrt(Real(3 + salt++));
    benchmark::DoNotOptimize(minimal_polynomial(Complex(v), 4, bits));
  }
}
BENCHMARK(BM_MinimalPolynomial)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
