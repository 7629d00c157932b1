#include "matchpoly/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace matchpoly {

std::uint64_t uniform_below(rng_engine& rng, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("empty range");
  return rng() % k;
}

graph random_graph(int n, double edge_probability, rng_engine& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < edge_probability) edges.emplace_back(u, v);
    }
  return graph(n, std::move(edges));
}

graph random_tree(int n, rng_engine& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(uniform_below(rng, v)), v);
  return graph(n, std::move(edges));
}

graph random_stars_and_triangles(int max_edges, rng_engine& rng) {
  std::vector<std::pair<int, int>> edges;
  int vertices = 0;
  int budget = max_edges;
  while (budget > 0) {
    if (budget >= 3 && uniform_below(rng, 2) == 0) {
      const int a = vertices;
      edges.insert(edges.end(), {{a, a + 1}, {a, a + 2}, {a + 1, a + 2}});
      vertices += 3;
      budget -= 3;
    } else {
      const int rays = 1 + static_cast<int>(uniform_below(rng, std::min(budget, 4)));
      const int center = vertices;
      for (int i = 1; i <= rays; ++i) edges.emplace_back(center, center + i);
      vertices += rays + 1;
      budget -= rays;
    }
  }

  std::vector<int> relabel(vertices);
  std::iota(relabel.begin(), relabel.end(), 0);
  for (int i = vertices - 1; i > 0; --i)
    std::swap(relabel[i], relabel[uniform_below(rng, i + 1)]);
  for (auto& [u, v] : edges) {
    u = relabel[u];
    v = relabel[v];
  }
  return graph(vertices, std::move(edges));
}

graph graph_from_pair_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) edges.emplace_back(u, v);
  if (bit < 64 && mask >> bit != 0)
    throw std::invalid_argument("mask has bits beyond the pair count");
  return graph(n, std::move(edges));
}

}  // namespace matchpoly
