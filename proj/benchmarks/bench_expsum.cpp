#include <benchmark/benchmark.h>

#include <random>

#include "glasner/expsum.hpp"

using namespace glasner;

namespace {

void BM_pair_bound(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.3, 0.7);
  std::vector<TorusPoint> pts;
  pts.reserve(k);
  for (int i = 0; i < k; ++i) {
    std::vector<double> v(d);
    for (auto& c : v) c = u(rng);
    pts.push_back(TorusPoint::approx(std::move(v)));
  }
  for (auto _ : state) {
    auto r = pair_correlation_bound(pts, 0.2, /*early_exit=*/true);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_pair_bound)->Args({1, 50})->Args({2, 50})->Args({3, 50});

void BM_complete_sum(benchmark::State& state) {
  CompleteSumSpec spec;
  spec.modulus = 9973;
  spec.coefficients = {0, 3, 1};
  spec.phase_offset = 0.0;
  for (auto _ : state) {
    auto s = complete_rational_sum(spec);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_complete_sum);

}  // namespace
