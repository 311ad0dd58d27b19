// Benchmarks for the F_p matrix kernels. The multiply has two regimes:
// small primes defer reduction across a whole dot product, large primes
// reduce per multiply-add, so both appear here.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "modpascal/fpmatrix.hpp"
#include "modpascal/modp.hpp"

namespace {

using namespace modpascal;

FpMatrix random_matrix(std::size_t dim, PrimeModulus p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p.value() - 1);
  FpMatrix m(dim, p);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m.set(r, c, Residue(dist(rng), p));
    }
  }
  return m;
}

void BM_MatMulSmallPrime(benchmark::State& state) {
  const PrimeModulus p(13);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const FpMatrix a = random_matrix(dim, p, 1);
  const FpMatrix b = random_matrix(dim, p, 2);
  for (auto _ : state) {
    FpMatrix c = a * b;
    benchmark::DoNotOptimize(c.raw(0, 0));
  }
}
BENCHMARK(BM_MatMulSmallPrime)->Arg(16)->Arg(64)->Arg(128)->Arg(256);

void BM_MatMulLargePrime(benchmark::State& state) {
  const PrimeModulus p(2147483647);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const FpMatrix a = random_matrix(dim, p, 3);
  const FpMatrix b = random_matrix(dim, p, 4);
  for (auto _ : state) {
    FpMatrix c = a * b;
    benchmark::DoNotOptimize(c.raw(0, 0));
  }
}
BENCHMARK(BM_MatMulLargePrime)->Arg(16)->Arg(64)->Arg(128)->Arg(256);

void BM_MatPow(benchmark::State& state) {
  const PrimeModulus p(5);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const FpMatrix a = jordan_unipotent(dim, p);
  for (auto _ : state) {
    FpMatrix c = a.pow(1000000007ull);
    benchmark::DoNotOptimize(c.raw(0, 0));
  }
}
BENCHMARK(BM_MatPow)->Arg(16)->Arg(64)->Arg(128);

void BM_MulRow(benchmark::State& state) {
  const PrimeModulus p(10007);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const FpMatrix a = random_matrix(dim, p, 5);
  std::vector<std::uint32_t> in(dim, 1), out(dim, 0);
  for (auto _ : state) {
    a.mul_row_raw(in, out);
    benchmark::DoNotOptimize(out[0]);
  }
}
BENCHMARK(BM_MulRow)->Arg(64)->Arg(256);

// I + A + ... + A^(q-1) for the unipotent block, the sum the vanishing
// theorem is about; q = p^n just above the dimension.
void BM_GeometricSum(benchmark::State& state) {
  const PrimeModulus p(static_cast<std::uint32_t>(state.range(0)));
  const auto m = static_cast<std::size_t>(state.range(1));
  const std::uint32_t n = [&] {
    std::uint32_t e = 1;
    while (checked_pow_u64(p.value(), e) < m) ++e;
    return e;
  }();
  const std::uint64_t q = checked_pow_u64(p.value(), n);
  const FpMatrix a = jordan_unipotent(m, p);
  for (auto _ : state) {
    FpMatrix s = geometric_sum(a, q);
    benchmark::DoNotOptimize(s.raw(0, 0));
  }
}
BENCHMARK(BM_GeometricSum)->Args({2, 32})->Args({2, 128})->Args({3, 81});

void BM_PolyPowLinear(benchmark::State& state) {
  const PrimeModulus p(3);
  const auto e = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    FpPolynomial f = poly_pow_linear(p, e);
    benchmark::DoNotOptimize(f.degree());
  }
}
BENCHMARK(BM_PolyPowLinear)->Arg(242)->Arg(728)->Arg(2186);

}  // namespace
