#include <benchmark/benchmark.h>

#include "lls/chain.hpp"
#include "lls/generator.hpp"
#include "lls/linalg.hpp"
#include "lls/torus.hpp"

namespace {

lls::Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  auto rng = lls::gen::make_rng(seed);
  lls::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = lls::gen::random_rational(rng);
  return m;
}

std::vector<int> feasible_delta(int d, int r) {
  auto rng = lls::gen::make_rng(static_cast<std::uint64_t>(d * 31 + r));
  return lls::gen::random_feasible_delta(d, r, 3, rng);
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lls::Matrix m = random_matrix(n / 2, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lls::rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(12)->Arg(16);

void BM_Pluecker(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lls::Subspace v = lls::Subspace::span(random_matrix(n / 2, n, 11));
  for (auto _ : state) benchmark::DoNotOptimize(lls::pluecker(v));
}
BENCHMARK(BM_Pluecker)->Arg(6)->Arg(8)->Arg(10);

void BM_OrbitDegree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lls::TorusSplit split(n, n);
  const lls::Subspace v = lls::Subspace::span(random_matrix(n, 2 * n, 13));
  for (auto _ : state) benchmark::DoNotOptimize(lls::orbit_degree(split, v));
}
BENCHMARK(BM_OrbitDegree)->Arg(4)->Arg(8);

void BM_GenerateExact(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::vector<int> delta = feasible_delta(d, 1);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lls::gen::random_exact_lls(d, 1, delta, ++seed));
}
BENCHMARK(BM_GenerateExact)->Arg(2)->Arg(4)->Arg(7);

void BM_BuildChain(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::vector<int> delta = feasible_delta(d, 1);
  const auto g = lls::gen::random_exact_lls(d, 1, delta, 42);
  for (auto _ : state) benchmark::DoNotOptimize(lls::build_chain(g));
}
BENCHMARK(BM_BuildChain)->Arg(2)->Arg(4)->Arg(7);

void BM_ValidateChain(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::vector<int> delta = feasible_delta(d, 1);
  const auto chain = lls::build_chain(lls::gen::random_exact_lls(d, 1, delta, 42));
  for (auto _ : state) benchmark::DoNotOptimize(lls::validate_chain(chain));
}
BENCHMARK(BM_ValidateChain)->Arg(2)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
