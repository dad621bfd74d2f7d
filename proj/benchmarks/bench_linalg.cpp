#include <benchmark/benchmark.h>

#include "starconf/linalg.hpp"
#include "starconf/rng.hpp"

using namespace starconf;

namespace {

DenseMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  SplitRng rng(seed);
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(f.modulus());
  return m;
}

void BM_Rref(benchmark::State& state) {
  const PrimeField f(kDefaultPrime);
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix m = random_matrix(f, n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(f, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(32, 256)->Complexity(benchmark::oNCubed);

void BM_RowReducerInsert(benchmark::State& state) {
  const PrimeField f(kDefaultPrime);
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix m = random_matrix(f, n, n, 2);
  for (auto _ : state) {
    RowReducer red(f, n);
    for (std::size_t r = 0; r < n; ++r) red.insert(m.row(r));
    benchmark::DoNotOptimize(red.rank());
  }
}
BENCHMARK(BM_RowReducerInsert)->RangeMultiplier(2)->Range(32, 256);

void BM_Intersect(benchmark::State& state) {
  const PrimeField f(kDefaultPrime);
  const auto n = static_cast<std::size_t>(state.range(0));
  const SubspaceBasis a = SubspaceBasis::span_of(f, random_matrix(f, 2 * n / 3, n, 3));
  const SubspaceBasis b = SubspaceBasis::span_of(f, random_matrix(f, 2 * n / 3, n, 4));
  for (auto _ : state) benchmark::DoNotOptimize(intersect_bases(f, a, b));
}
BENCHMARK(BM_Intersect)->RangeMultiplier(2)->Range(32, 256);

}  // namespace
