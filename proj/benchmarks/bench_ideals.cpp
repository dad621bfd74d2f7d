#include <benchmark/benchmark.h>

#include "starconf/lefschetz.hpp"
#include "starconf/resolution.hpp"
#include "starconf/star_config.hpp"

using namespace starconf;

namespace {

StarConfigSpec quadrics(int n, int r, int s) {
  StarConfigSpec spec;
  spec.n = n;
  spec.r = r;
  spec.degrees.assign(static_cast<std::size_t>(s), 2);
  return spec;
}

// Builds a fresh ideal each iteration so the slice cache starts cold.
void BM_HilbertFunction(benchmark::State& state) {
  const auto spec = quadrics(static_cast<int>(state.range(0)), 2, static_cast<int>(state.range(1)));
  const int t_max = spec.total_degree() + spec.n;
  for (auto _ : state) {
    StarIdeal X = build(spec);
    benchmark::DoNotOptimize(hf_sequence(X.ideal, t_max));
  }
}
BENCHMARK(BM_HilbertFunction)->Args({2, 4})->Args({2, 5})->Args({3, 4})->Args({3, 5})->Unit(benchmark::kMillisecond);

void BM_IntersectionOracle(benchmark::State& state) {
  const auto spec = quadrics(3, 2, static_cast<int>(state.range(0)));
  const StarIdeal X = build(spec);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_oracle(X, spec.total_degree()));
}
BENCHMARK(BM_IntersectionOracle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_KoszulBetti(benchmark::State& state) {
  const auto spec = quadrics(static_cast<int>(state.range(0)), 2, 4);
  const int d = spec.total_degree();
  for (auto _ : state) {
    StarIdeal X = build(spec);
    benchmark::DoNotOptimize(koszul_betti(X.ideal, spec.n + 1, d + spec.n + 1));
  }
}
BENCHMARK(BM_KoszulBetti)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_WlpLinkedPair(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LinkedPair p = make_linked_pair(s, 1, 7);
    benchmark::DoNotOptimize(wlp_sum(p.X, p.Y, p.L, default_wlp_t_max(p.X, p.Y)));
  }
}
BENCHMARK(BM_WlpLinkedPair)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
