#include <benchmark/benchmark.h>

#include <random>

#include "glasner/intlinalg.hpp"

using namespace glasner;

namespace {

IntMat random_mat(int r, int c, int bound, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(-bound, bound);
  IntMat A(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) A(i, j) = u(rng);
  return A;
}

void BM_snf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntMat A = random_mat(n, n, 20, 11);
  for (auto _ : state) {
    auto f = smith_normal_form(A);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_snf)->Arg(3)->Arg(5)->Arg(8);

void BM_gcd_factorize(benchmark::State& state) {
  IntMat A = random_mat(4, 6, 20, 13);
  for (auto _ : state) {
    auto f = gcd_bound_factorize(A);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_gcd_factorize);

}  // namespace
