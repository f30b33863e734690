#include <benchmark/benchmark.h>

#include "cremona/delpezzo/hexagon.hpp"
#include "cremona/delpezzo/models.hpp"
#include "cremona/delpezzo/points.hpp"
#include "cremona/delpezzo/surfaces.hpp"
#include "cremona/exactalg/cyclotomic.hpp"
#include "cremona/picard/lattice.hpp"
#include "cremona/projlin/projmap.hpp"

using namespace cremona;

static void BM_CyclotomicProduct(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Cyclotomic a = Cyclotomic::zeta(n) + Cyclotomic(3);
  const Cyclotomic b = Cyclotomic::zeta(n, 2) - Cyclotomic(1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicProduct)->Arg(3)->Arg(12)->Arg(18);

static void BM_ProjCanonical(benchmark::State& state) {
  const Matrix m{{2, -1, 0}, {1, 1, 3}, {0, 5, -7}};
  for (auto _ : state) benchmark::DoNotOptimize(ProjMap(m).key());
}
BENCHMARK(BM_ProjCanonical);

static void BM_HexagonGroup432(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_hexagon_group().order());
}
BENCHMARK(BM_HexagonGroup432)->Unit(benchmark::kMillisecond);

static void BM_FermatClosure648(benchmark::State& state) {
  const auto gens = fermat_generators();
  for (auto _ : state) benchmark::DoNotOptimize(closure(gens).order());
}
BENCHMARK(BM_FermatClosure648)->Unit(benchmark::kMillisecond);

static void BM_MinusOneClasses(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minus_one(r).size());
}
BENCHMARK(BM_MinusOneClasses)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

static void BM_GraphAutomorphismsPetersen(benchmark::State& state) {
  const auto g = IntersectionGraph::from_classes(enumerate_minus_one(4));
  for (auto _ : state) benchmark::DoNotOptimize(graph_automorphisms(g).order());
}
BENCHMARK(BM_GraphAutomorphismsPetersen)->Unit(benchmark::kMillisecond);

static void BM_RealizablePermutations(benchmark::State& state) {
  const auto cfg = conjugate_points_config();
  for (auto _ : state) benchmark::DoNotOptimize(realizable_point_permutations(cfg).order());
}
BENCHMARK(BM_RealizablePermutations)->Unit(benchmark::kMillisecond);

static void BM_TorusCentralizer18(benchmark::State& state) {
  const HexAut g(18, 0, 0, Perm::from_cycles(3, {{0, 1, 2}}), true, 5);
  for (auto _ : state) benchmark::DoNotOptimize(torus_centralizer(18, g).count);
}
BENCHMARK(BM_TorusCentralizer18);

static void BM_Dp1Containment(benchmark::State& state) {
  const auto s = dp1_surface(kDp1CurveLambda, kDp1CurveMu, Dp1Sextic::scaled_whole);
  const auto curves = dp1_curves();
  for (auto _ : state) benchmark::DoNotOptimize(surface_contains_curve(s, curves[0]));
}
BENCHMARK(BM_Dp1Containment);
BENCHMARK_MAIN();
