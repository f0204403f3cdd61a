#include <benchmark/benchmark.h>

#include <nprox/measure.hpp>
#include <nprox/points.hpp>
#include <nprox/projector.hpp>
#include <nprox/zoo.hpp>

using namespace nprox;

namespace {

TestFunction pole(int nvars, double c) {
  std::vector<cplx> a(static_cast<std::size_t>(nvars), 1.0 / nvars);
  return TestFunction::reciprocal(AffineForm{a, -c});
}

std::vector<Point> disk_nodes(std::size_t count) {
  std::size_t m = 2;
  while (m < count) m *= 2;
  auto pts = planar(leja_disk(m)).points;
  pts.resize(count);
  return pts;
}

}  // namespace

static void BM_LagrangeBuild(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto nodes = family_nodes("chebyshev", static_cast<std::size_t>(d) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(lagrange(nodes));
}
BENCHMARK(BM_LagrangeBuild)->Arg(8)->Arg(16)->Arg(28);

static void BM_LagrangeApply(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto p = lagrange(family_nodes("chebyshev", static_cast<std::size_t>(d) + 1));
  const auto f = pole(1, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(p.apply(f));
}
BENCHMARK(BM_LagrangeApply)->Arg(8)->Arg(16)->Arg(28);

static void BM_KerginBuild(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto nodes = disk_nodes(static_cast<std::size_t>(d) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(kergin(nodes, d));
}
BENCHMARK(BM_KerginBuild)->Arg(4)->Arg(8)->Arg(12);

static void BM_ProductBuild(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto p1 = lagrange(family_nodes("chebyshev", static_cast<std::size_t>(d) + 1));
  const auto p2 = lagrange(family_nodes("equiangular", static_cast<std::size_t>(d) + 1));
  for (auto _ : state) benchmark::DoNotOptimize(newton_product(p1, p2));
}
BENCHMARK(BM_ProductBuild)->Arg(4)->Arg(8)->Arg(12);

static void BM_ProductApply(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto p = newton_product(lagrange(family_nodes("chebyshev", static_cast<std::size_t>(d) + 1)),
                                lagrange(family_nodes("equiangular", static_cast<std::size_t>(d) + 1)));
  const auto f = pole(2, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(p.apply(f));
}
BENCHMARK(BM_ProductApply)->Arg(4)->Arg(8)->Arg(12);

static void BM_PolynomialEval(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto p = newton_product(lagrange(family_nodes("chebyshev", static_cast<std::size_t>(d) + 1)),
                                lagrange(family_nodes("chebyshev", static_cast<std::size_t>(d) + 1)))
                     .apply(pole(2, 3.0));
  const Point z{cplx(0.3, 0.1), cplx(-0.2, 0.4)};
  for (auto _ : state) benchmark::DoNotOptimize(p(z));
}
BENCHMARK(BM_PolynomialEval)->Arg(8)->Arg(16)->Arg(24);

static void BM_GramSchmidt(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto m = chebyshev_measure(2 * d + 2);
  for (auto _ : state) benchmark::DoNotOptimize(gram_schmidt_basis(m, d));
}
BENCHMARK(BM_GramSchmidt)->Arg(10)->Arg(20)->Arg(30);

static void BM_GramSchmidtProduct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto m = product_measure(chebyshev_measure(d + 1), circle_measure(2 * d + 1));
  for (auto _ : state) benchmark::DoNotOptimize(gram_schmidt_basis(m, d));
}
BENCHMARK(BM_GramSchmidtProduct)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
