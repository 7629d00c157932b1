#pragma once

// Brute-force reference implementations used as oracles by the tests.
// They are deliberately written against the raw definitions and share no
// code paths with the library: matchings come from scanning all edge
// subsets, adjacency from a BFS over the symmetric difference, and good
// structures from checking every simple vertex sequence.

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "matchpoly/edge_set.hpp"
#include "matchpoly/graph.hpp"

namespace oracle {

using matchpoly::edge_set;
using matchpoly::graph;

inline bool subset_is_matching(const graph& g, std::uint64_t subset) {
  std::vector<char> used(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(subset >> e & 1)) continue;
    auto [u, v] = g.edge_endpoints(e);
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

inline edge_set to_edge_set(const graph& g, std::uint64_t subset) {
  edge_set mask(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    if (subset >> e & 1) mask.set(e);
  return mask;
}

// All matchings in increasing numeric order of the subset value.
inline std::vector<edge_set> subset_scan_matchings(const graph& g) {
  assert(g.edge_count() <= 20);
  std::vector<edge_set> out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << g.edge_count()); ++subset)
    if (subset_is_matching(g, subset)) out.push_back(to_edge_set(g, subset));
  return out;
}

// Adjacency by the connectivity criterion: the difference is nonempty and
// the subgraph it induces is connected. BFS over vertices.
inline bool delta_adjacent(const graph& g, const edge_set& a, const edge_set& b) {
  const std::vector<int> delta = (a ^ b).bits();
  if (delta.empty()) return false;

  std::vector<std::vector<int>> nbrs(g.vertex_count());
  std::vector<char> in_delta(g.vertex_count(), 0);
  for (int e : delta) {
    auto [u, v] = g.edge_endpoints(e);
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
    in_delta[u] = in_delta[v] = 1;
  }

  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{g.edge_endpoints(delta[0]).first};
  seen[queue[0]] = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : nbrs[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in_delta[v] && !seen[v]) return false;
  return true;
}

// Skeleton degree of one matching by scanning every other matching.
inline long long brute_degree(const graph& g, const std::vector<edge_set>& all,
                              const edge_set& mask) {
  long long degree = 0;
  for (const edge_set& other : all)
    if (!(other == mask) && delta_adjacent(g, mask, other)) ++degree;
  return degree;
}

struct brute_counts {
  long long oo = 0, cc = 0, oc = 0, cycles = 0;
  long long total() const { return oo + cc + oc + cycles; }
};

// Counts good paths and cycles by enumerating every simple vertex sequence
// and filtering with the raw definitions.
inline brute_counts brute_good_structures(const graph& g, const edge_set& m_mask) {
  brute_counts counts;

  std::vector<char> saturated(g.vertex_count(), 0);
  m_mask.for_each([&](int e) {
    auto [u, v] = g.edge_endpoints(e);
    saturated[u] = saturated[v] = 1;
  });

  std::vector<int> sequence;
  std::vector<char> visited(g.vertex_count(), 0);

  auto edge_of = [&](int u, int v) { return g.edge_between(u, v); };
  auto in_m = [&](int e) { return m_mask.test(e); };

  auto alternating = [&](const std::vector<int>& vertices, bool closed) {
    std::vector<int> edges;
    for (std::size_t i = 1; i < vertices.size(); ++i)
      edges.push_back(edge_of(vertices[i - 1], vertices[i]));
    if (closed) edges.push_back(edge_of(vertices.back(), vertices.front()));
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (in_m(edges[i]) == in_m(edges[i - 1])) return std::vector<int>{};
    if (closed && edges.size() > 1 && in_m(edges.front()) == in_m(edges.back()))
      return std::vector<int>{};
    return edges;
  };

  auto consider_path = [&]() {
    // count each undirected path once
    if (sequence.front() > sequence.back()) return;
    const std::vector<int> edges = alternating(sequence, false);
    if (edges.empty()) return;
    const bool first_in = in_m(edges.front());
    const bool last_in = in_m(edges.back());
    if (first_in && last_in)
      ++counts.oo;
    else if (!saturated[sequence.front()] && !saturated[sequence.back()])
      ++counts.cc;
    else if ((first_in && !saturated[sequence.back()]) ||
             (last_in && !saturated[sequence.front()]))
      ++counts.oc;
  };

  auto consider_cycle = [&]() {
    // count each cycle once: started at its minimum vertex, one direction
    if (sequence.size() < 3) return;
    if (sequence[1] > sequence.back()) return;
    for (std::size_t i = 1; i < sequence.size(); ++i)
      if (sequence[i] < sequence[0]) return;
    if (edge_of(sequence.back(), sequence.front()) < 0) return;
    if (alternating(sequence, true).empty()) return;
    ++counts.cycles;
  };

  auto extend = [&](auto&& self, int vertex) -> void {
    visited[vertex] = 1;
    sequence.push_back(vertex);
    if (sequence.size() >= 2) {
      consider_path();
      consider_cycle();
    }
    for (int next : g.neighbors(vertex))
      if (!visited[next]) self(self, next);
    sequence.pop_back();
    visited[vertex] = 0;
  };

  for (int start = 0; start < g.vertex_count(); ++start) extend(extend, start);
  return counts;
}

}  // namespace oracle
