#include <benchmark/benchmark.h>

#include <random>

#include "glasner/torus.hpp"

using namespace glasner;

namespace {

TorusPointSet random_float_set(int d, int k, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<TorusPoint> pts;
  pts.reserve(k);
  for (int i = 0; i < k; ++i) {
    std::vector<double> v(d);
    for (auto& c : v) c = u(rng);
    pts.push_back(TorusPoint::approx(std::move(v)));
  }
  return TorusPointSet::of(std::move(pts));
}

void BM_density_check(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  TorusPointSet Y = random_float_set(d, k, 42);
  for (auto _ : state) {
    auto v = is_eps_dense(Y, 0.2, 4);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_density_check)->Args({1, 100})->Args({2, 100})->Args({2, 1000})->Args({3, 200});

void BM_torus_dist(benchmark::State& state) {
  TorusPointSet Y = random_float_set(3, 2, 7);
  for (auto _ : state) {
    double d = torus_dist(Y.points[0], Y.points[1]);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_torus_dist);

}  // namespace

BENCHMARK_MAIN();
