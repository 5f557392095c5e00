#include <benchmark/benchmark.h>

#include "cofmat/badmap.hpp"
#include "cofmat/generators.hpp"
#include "cofmat/matroid.hpp"
#include "cofmat/projective.hpp"

using namespace cofmat;

// Exact rank of the cofactor matrix of K_n at one random integer placement.
static void BM_RankCompleteGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RatMatrix c = cofactor_matrix(random_points(n, 7), complete_edges(n));
  for (auto _ : state) benchmark::DoNotOptimize(rank(c));
}
BENCHMARK(BM_RankCompleteGraph)->DenseRange(4, 12, 2);

// Generic rank through the matroid, fresh cache each time.
static void BM_MatroidRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const EdgeSet edges = complete_bipartite(n / 2, n - n / 2).edges();
  for (auto _ : state) {
    const GenericMatroid m(n, 1);
    benchmark::DoNotOptimize(m.rank(edges));
  }
}
BENCHMARK(BM_MatroidRank)->Arg(8)->Arg(10)->Arg(12);

static void BM_Closure(benchmark::State& state) {
  const GenericMatroid m(9, 1);
  auto rng = trial_rng(1, 0);
  const Graph g = random_independent_graph(m, 9, 15, rng);
  for (auto _ : state) {
    const GenericMatroid fresh(9, 1);
    benchmark::DoNotOptimize(fresh.closure(g.edges()));
  }
}
BENCHMARK(BM_Closure);

static void BM_ClassifyFiveSet(benchmark::State& state) {
  const GenericMatroid m(9, 1);
  auto rng = trial_rng(1, 1);
  const Graph h = random_independent_graph(m, 9, 12, rng);
  for (auto _ : state) {
    const GenericMatroid fresh(9, 1);
    benchmark::DoNotOptimize(fresh.classify_five_set(h, {0, 2, 4, 6, 8}));
  }
}
BENCHMARK(BM_ClassifyFiveSet);

static void BM_BuildBadMap(benchmark::State& state) {
  const auto pts = random_points(6, 3);
  const std::array<Point, 6> p{pts[0], pts[1], pts[2], pts[3], pts[4], pts[5]};
  for (auto _ : state) benchmark::DoNotOptimize(build_bad_map(p));
}
BENCHMARK(BM_BuildBadMap);

static void BM_MotionPipeline(benchmark::State& state) {
  auto rng = trial_rng(1, 2);
  std::vector<Point> pts;
  for (int i = 0; i < 7; ++i) pts.push_back(random_rational_point(rng));
  const Framework src(complete_graph(7).without_edges(std::array<Edge, 3>{Edge{0, 1}, Edge{2, 3}, Edge{4, 5}}), pts);
  const Motion q = random_motion_of(src, rng);
  const Mat3 a{Vec3{2, 1, 0}, Vec3{0, 1, 1}, Vec3{1, 0, 3}};
  const Framework dst = apply_projective(a, src);
  for (auto _ : state) benchmark::DoNotOptimize(convert_motion_pipeline(src.graph(), src, dst, a, q));
}
BENCHMARK(BM_MotionPipeline);
BENCHMARK_MAIN();
