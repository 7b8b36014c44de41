#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "confhodge/double_complex.hpp"
#include "confhodge/io.hpp"
#include "confhodge/kriz.hpp"
#include "confhodge/motivic.hpp"

namespace {

using namespace confhodge;

Algebra fixture(const std::string& name) {
  return load_algebra(std::string(CONFHODGE_FIXTURE_DIR) + "/" + name + ".json");
}

void BM_RelativeCohomology(benchmark::State& state, const char* name) {
  const Algebra alg = fixture(name);
  const auto graph = DiagonalGraph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(relative_cohomology(alg, graph));
}
BENCHMARK_CAPTURE(BM_RelativeCohomology, p1, "p1")->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RelativeCohomology, elliptic, "elliptic")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_E3Table(benchmark::State& state, const char* name) {
  const Algebra alg = fixture(name);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e3_table(alg, n));
}
BENCHMARK_CAPTURE(BM_E3Table, p1, "p1")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_E3Table, elliptic, "elliptic")->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution keep(0.1);
  RationalMatrix m(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c)
      if (keep(rng)) m.add(r, c, entry(rng));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(16, 256);

void BM_Chromatic(benchmark::State& state) {
  const auto graph = DiagonalGraph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_polynomial(graph));
}
BENCHMARK(BM_Chromatic)->DenseRange(4, 8, 2);

}  // namespace
BENCHMARK_MAIN();
