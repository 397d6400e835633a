#include "cayleysum/bounds.hpp"
#include "cayleysum/construction.hpp"
#include "cayleysum/random_instances.hpp"

#include <benchmark/benchmark.h>

using namespace cayleysum;

namespace {

Matrix random_matrix(std::size_t n) {
  Rng rng(n);
  std::uniform_int_distribution<long> entry(-9, 9);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = Rational(entry(rng), 1 + rng() % 5);
      m(r, c).canonicalize();
    }
  }
  return m;
}

PointSet moment_curve(std::size_t dim, std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t t = 1; t <= n; ++t) {
    Point p(dim);
    Rational power = 1;
    for (auto& c : p) c = power *= static_cast<unsigned long>(t);
    pts.push_back(p);
  }
  return PointSet(dim, pts);
}

void BM_DeterminantBareiss(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_DeterminantBareiss)->DenseRange(4, 12, 4);

void BM_DeterminantCofactor(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_cofactor(m));
}
BENCHMARK(BM_DeterminantCofactor)->DenseRange(4, 8, 2);

void BM_CyclicHull(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto pts = moment_curve(dim, dim + 4);
  const auto method = state.range(1) == 0 ? HullMethod::kDoubleDescription : HullMethod::kExhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts, method));
}
BENCHMARK(BM_CyclicHull)->ArgsProduct({{3, 4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Phi(benchmark::State& state) {
  const std::vector<std::size_t> n(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(phi(n.size() + 3, n));
}
BENCHMARK(BM_Phi)->DenseRange(2, 8, 2);

void BM_TauStarSearch(benchmark::State& state) {
  const auto params = ConstructionParams::defaults(5, 2, {5, 5});
  for (auto _ : state) benchmark::DoNotOptimize(find_tau_star(params));
}
BENCHMARK(BM_TauStarSearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
