#include <benchmark/benchmark.h>

#include <vector>

#include "valab/generators.hpp"
#include "valab/harness.hpp"
#include "valab/polarization.hpp"
#include "valab/sphere.hpp"
#include "valab/valuations.hpp"

using namespace valab;

namespace {

void BM_RandomHull(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto count = static_cast<std::size_t>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_hull(n, count, 1.0, ++seed));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}
BENCHMARK(BM_RandomHull)->Args({2, 64})->Args({3, 12})->Args({3, 64})->Args({4, 12})->Args({4, 32})->Args({5, 12});

void BM_MinkowskiSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_body(n, 1), b = random_body(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(a, b));
}
BENCHMARK(BM_MinkowskiSum)->DenseRange(2, 4);

void BM_ProjectedMoment(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_body(n, 3);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(projected_moment(p, random_unit_vector(n, 5, i++)));
}
BENCHMARK(BM_ProjectedMoment)->DenseRange(2, 5);

void BM_MixedProjectedMoment(benchmark::State& state) {
  const std::vector<PolytopeBody> bodies{cube(3), random_body(3, 31), random_body(3, 32)};
  std::uint64_t i = 0;
  for (auto _ : state) {
    const Vec u = random_unit_vector(3, 5, i++);
    std::vector<EmbeddedProjection> shadows;
    for (const auto& k : bodies) shadows.push_back(project(k, u));
    benchmark::DoNotOptimize(mixed_projected_moment(shadows));
  }
}
BENCHMARK(BM_MixedProjectedMoment);

void BM_SamplerThroughput(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SphereSampler s(n, SphereMethod::MonteCarloAntithetic, 100000, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(s, [](const Vec& u) { return sym_power(u, 2); }));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SamplerThroughput)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_TheoremCheck(benchmark::State& state) {
  const auto p = random_body(3, 7);
  const SphereSampler s(3, SphereMethod::MonteCarloAntithetic, 10000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem(p, s));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_TheoremCheck)->Unit(benchmark::kMillisecond);

void BM_PolarizeQ1(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<PolytopeBody> bodies;
  for (std::size_t i = 0; i < n; ++i) bodies.push_back(random_body(n, 40 + i, 8));
  for (auto _ : state) benchmark::DoNotOptimize(polarize(bodies, BaseFunctional::Q1, static_cast<int>(n)));
}
BENCHMARK(BM_PolarizeQ1)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
