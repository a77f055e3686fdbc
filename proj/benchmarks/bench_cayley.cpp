#include <benchmark/benchmark.h>

#include "glasner/cayley.hpp"
#include "glasner/experiments.hpp"

using namespace glasner;

namespace {

void BM_cayley_ball(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  auto S = sl2_elementary_generators();
  for (auto _ : state) {
    auto ball = cayley_ball(S, r, 1000000);
    benchmark::DoNotOptimize(ball);
  }
}
BENCHMARK(BM_cayley_ball)->Arg(4)->Arg(8)->Arg(12);

void BM_group_to_polynomial(benchmark::State& state) {
  auto S = sl2_elementary_generators();
  for (auto _ : state) {
    auto r = group_to_polynomial(S);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_group_to_polynomial);

}  // namespace
