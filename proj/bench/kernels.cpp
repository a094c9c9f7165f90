#include "transdom/colorsearch.hpp"
#include "transdom/geometry.hpp"
#include "transdom/paley.hpp"
#include "transdom/solvers.hpp"
#include "transdom/vcnets.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

using namespace transdom;

namespace {

PointSet shuffled_points(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> pts(n, std::vector<int>(d));
  std::vector<int> order(n);
  for (int a = 0; a < d; ++a) {
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < n; ++i) pts[i][a] = order[i];
  }
  return PointSet::from_integers(pts);
}

void BM_Domination(benchmark::State& state) {
  const Tournament t = paley_tournament(static_cast<int>(state.range(0)));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    auto r = parallel ? min_dominating_set(t) : serial::min_dominating_set(t);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Domination)->ArgsProduct({{19, 23, 31}, {0, 1}})->ArgNames({"q", "parallel"})->Unit(benchmark::kMillisecond);

void BM_MinEnclosure(benchmark::State& state) {
  const ColoredTournament ct = blowup_c3();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = parallel ? min_enclosure_set(ct) : serial::min_enclosure_set(ct);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MinEnclosure)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Paradoxical(benchmark::State& state) {
  const Tournament t = paley_tournament(static_cast<int>(state.range(0)));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    bool r = parallel ? is_k_paradoxical(t, 2) : serial::is_k_paradoxical(t, 2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Paradoxical)->ArgsProduct({{67, 103}, {0, 1}})->ArgNames({"q", "parallel"});

// The extremal set has no hit, so the whole triple scan runs.
void BM_PointInBox(benchmark::State& state) {
  const PointSet s = extremal_pointset(static_cast<int>(state.range(0)));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    auto r = parallel ? exists_point_in_box(s) : serial::exists_point_in_box(s);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PointInBox)->ArgsProduct({{2, 3}, {0, 1}})->ArgNames({"d", "parallel"});

void BM_VerifyBoxCover(benchmark::State& state) {
  const PointSet s = shuffled_points(static_cast<int>(state.range(0)), 3, 11);
  const VertexSet cover = box_cover(s).cover;
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    bool r = parallel ? verify_box_cover(s, cover) : serial::verify_box_cover(s, cover);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifyBoxCover)->ArgsProduct({{200, 800}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_EpsNet(benchmark::State& state) {
  const PointSet s = shuffled_points(120, 3, 12);
  const Hypergraph h = domination_hypergraph(scramble(coordinate_tournament(s), ScramblingMask::of({2, 3})).base());
  const FractionalSolution f = fractional_transversal(h, LpMode::Approximate);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = parallel ? epsnet_sample(h, f, 17, 14, 2000, 1) : serial::epsnet_sample(h, f.weights, 17, 14, 2000, 1);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EpsNet)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
