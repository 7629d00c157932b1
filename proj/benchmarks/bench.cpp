#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>
#include <vector>

#include <matchpoly/good_structures.hpp>
#include <matchpoly/matching.hpp>
#include <matchpoly/skeleton.hpp>

namespace {

using namespace matchpoly;

graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return graph(n, std::move(edges));
}

graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return graph(n, std::move(edges));
}

matching alternating_path_matching(const graph& g) {
  std::vector<int> picked;
  for (int e = 0; e < g.edge_count(); e += 2) picked.push_back(e);
  return matching::from_edge_ids(g, picked);
}

graph disjoint_triangles(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({3 * i, 3 * i + 1});
    edges.push_back({3 * i, 3 * i + 2});
    edges.push_back({3 * i + 1, 3 * i + 2});
  }
  return graph(3 * k, std::move(edges));
}

// The count recursion visits one leaf per matching, so runtime scales with
// the count itself; keep the paths short enough to stay in the millions.
void bm_count_matchings_path(benchmark::State& state) {
  const graph g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_matchings(g));
}
BENCHMARK(bm_count_matchings_path)->Arg(16)->Arg(24)->Arg(32);

void bm_enumerate_matchings(benchmark::State& state) {
  const graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto all = enumerate_matchings(g);
    benchmark::DoNotOptimize(all.size());
  }
}
BENCHMARK(bm_enumerate_matchings)->Arg(6)->Arg(8);

void bm_build_skeleton(benchmark::State& state) {
  const graph g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const skeleton_graph s = build_skeleton(g);
    benchmark::DoNotOptimize(s.edge_count());
  }
}
BENCHMARK(bm_build_skeleton)->Arg(10)->Arg(14);

void bm_degree_by_structures(benchmark::State& state) {
  const graph g = path_graph(static_cast<int>(state.range(0)));
  const matching m = alternating_path_matching(g);
  for (auto _ : state) benchmark::DoNotOptimize(degree_of_matching(m).total);
}
BENCHMARK(bm_degree_by_structures)->Arg(16)->Arg(32);

void bm_degree_closed_form(benchmark::State& state) {
  const graph g = disjoint_triangles(static_cast<int>(state.range(0)));
  std::vector<int> picked;
  for (int i = 0; i < state.range(0); ++i) picked.push_back(g.edge_between(3 * i, 3 * i + 1));
  const matching m = matching::from_edge_ids(g, picked);
  for (auto _ : state) benchmark::DoNotOptimize(degree_closed_form(m).total);
}
BENCHMARK(bm_degree_closed_form)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
