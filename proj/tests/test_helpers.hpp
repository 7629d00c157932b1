#pragma once

#include <cassert>
#include <initializer_list>
#include <utility>
#include <vector>

#include "matchpoly/graph.hpp"
#include "matchpoly/matching.hpp"

namespace testutil {

inline matchpoly::graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return matchpoly::graph(n, std::move(edges));
}

inline matchpoly::graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return matchpoly::graph(n, std::move(edges));
}

inline matchpoly::graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return matchpoly::graph(n, std::move(edges));
}

inline matchpoly::graph star_graph(int rays) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= rays; ++v) edges.emplace_back(0, v);
  return matchpoly::graph(rays + 1, std::move(edges));
}

// One K2 component and one triangle; the lone edge 0-1 is canonically
// first.
inline matchpoly::graph edge_plus_triangle() {
  return matchpoly::graph(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}});
}

// A 4-cycle 0-1-2-3 with a tail 3-4 and a pendant edge 4-5.
inline matchpoly::graph cycle_with_tail() {
  return matchpoly::graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}});
}

inline matchpoly::edge_set mask_of(const matchpoly::graph& g,
                                   std::initializer_list<std::pair<int, int>> endpoint_pairs) {
  matchpoly::edge_set mask(g.edge_count());
  for (auto [u, v] : endpoint_pairs) {
    const int e = g.edge_between(u, v);
    assert(e >= 0);
    mask.set(e);
  }
  return mask;
}

inline matchpoly::matching match_of(const matchpoly::graph& g,
                                    std::initializer_list<std::pair<int, int>> endpoint_pairs) {
  return matchpoly::matching(g, mask_of(g, endpoint_pairs));
}

}  // namespace testutil
