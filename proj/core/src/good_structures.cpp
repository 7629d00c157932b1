#include "matchpoly/good_structures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace matchpoly {

namespace {

// Vertex sequence of a path given as consecutive edges, or empty when the
// edges do not form a simple path.
std::vector<int> path_vertices(const graph& g, std::span<const int> edges) {
  if (edges.empty()) return {};
  auto [u0, v0] = g.edge_endpoints(edges[0]);
  if (edges.size() == 1) return {u0, v0};

  auto [u1, v1] = g.edge_endpoints(edges[1]);
  int first;
  if (u0 == u1 || u0 == v1)
    first = v0;  // e0 joins the walk at u0
  else if (v0 == u1 || v0 == v1)
    first = u0;
  else
    return {};

  std::vector<int> vertices{first};
  int current = first;
  for (int e : edges) {
    auto [u, v] = g.edge_endpoints(e);
    if (u == current)
      current = v;
    else if (v == current)
      current = u;
    else
      return {};
    vertices.push_back(current);
  }
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return vertices;
}

}  // namespace

path_class classify_alternating_path(const matching& m, std::span<const int> path_edges) {
  const graph& g = m.owner();
  if (path_edges.empty()) throw std::invalid_argument("empty edge sequence");
  for (int e : path_edges)
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument("edge id " + std::to_string(e) + " out of range");

  const std::vector<int> vertices = path_vertices(g, path_edges);
  if (vertices.empty()) throw std::invalid_argument("edge sequence is not a simple path");

  for (std::size_t i = 1; i < path_edges.size(); ++i)
    if (m.contains(path_edges[i]) == m.contains(path_edges[i - 1]))
      return path_class::not_good;

  const bool first_in = m.contains(path_edges.front());
  const bool last_in = m.contains(path_edges.back());
  const auto saturated = saturation_flags(m);
  const bool front_free = !saturated[vertices.front()];
  const bool back_free = !saturated[vertices.back()];

  if (first_in && last_in) return path_class::oo;
  if (front_free && back_free) return path_class::cc;
  if ((first_in && back_free) || (last_in && front_free)) return path_class::oc;
  return path_class::not_good;
}

namespace {

struct structure_collector {
  const graph& g;
  const matching& m;
  // canonical edge sequence -> kind; the map ordering doubles as the
  // lexicographic output order
  std::map<std::vector<int>, structure_kind> found;

  std::vector<alternating_structure> take() {
    std::vector<alternating_structure> out;
    out.reserve(found.size());
    for (auto& [edges, kind] : found) {
      alternating_structure s{kind, edges, {}};
      s.in_matching.reserve(edges.size());
      for (int e : edges) s.in_matching.push_back(m.contains(e) ? 1 : 0);
      out.push_back(std::move(s));
    }
    return out;
  }
};

struct path_search {
  const graph& g;
  const matching& m;
  const std::vector<char>& saturated;
  structure_collector& sink;
  std::vector<char> on_path;
  std::vector<int> edges;

  void record(bool first_in, bool last_in, int first_vertex, int last_vertex) {
    path_class c;
    if (first_in && last_in)
      c = path_class::oo;
    else if (!saturated[first_vertex] && !saturated[last_vertex])
      c = path_class::cc;
    else if ((first_in && !saturated[last_vertex]) || (last_in && !saturated[first_vertex]))
      c = path_class::oc;
    else
      return;

    std::vector<int> reversed(edges.rbegin(), edges.rend());
    const std::vector<int>& canonical = std::min(edges, reversed);
    structure_kind kind = c == path_class::oo   ? structure_kind::oo_path
                          : c == path_class::cc ? structure_kind::cc_path
                                                : structure_kind::oc_path;
    sink.found.emplace(canonical, kind);
  }

  void extend(int first_vertex, int vertex, bool first_in, bool last_in) {
    record(first_in, last_in, first_vertex, vertex);
    g.edges_at(vertex).for_each([&](int e) {
      if (m.contains(e) == last_in) return;  // must alternate
      auto [u, v] = g.edge_endpoints(e);
      int next = u == vertex ? v : u;
      if (on_path[next]) return;
      on_path[next] = 1;
      edges.push_back(e);
      extend(first_vertex, next, first_in, m.contains(e));
      edges.pop_back();
      on_path[next] = 0;
    });
  }

  void run() {
    on_path.assign(g.vertex_count(), 0);
    for (int start = 0; start < g.vertex_count(); ++start) {
      on_path[start] = 1;
      g.edges_at(start).for_each([&](int e) {
        auto [u, v] = g.edge_endpoints(e);
        int next = u == start ? v : u;
        on_path[next] = 1;
        edges.push_back(e);
        extend(start, next, m.contains(e), m.contains(e));
        edges.pop_back();
        on_path[next] = 0;
      });
      on_path[start] = 0;
    }
  }
};

struct cycle_search {
  const graph& g;
  const matching& m;
  structure_collector& sink;
  std::vector<char> on_path;
  std::vector<int> edges;
  int base = 0;           // lowest vertex of any recorded cycle
  int second_vertex = 0;  // dedup: traverse toward the smaller neighbor

  void record() {
    // rotate so the lowest edge id comes first, oriented toward its
    // smaller cycle-neighbor
    const int k = static_cast<int>(edges.size());
    const int p = static_cast<int>(std::min_element(edges.begin(), edges.end()) - edges.begin());
    auto at = [&](int i) { return edges[(i % k + k) % k]; };
    std::vector<int> canonical;
    canonical.reserve(k);
    const int step = at(p + 1) < at(p - 1) ? 1 : -1;
    for (int i = 0; i < k; ++i) canonical.push_back(at(p + step * i));
    sink.found.emplace(std::move(canonical), structure_kind::good_cycle);
  }

  void extend(int vertex, bool first_in, bool last_in) {
    g.edges_at(vertex).for_each([&](int e) {
      if (m.contains(e) == last_in) return;
      auto [u, v] = g.edge_endpoints(e);
      int next = u == vertex ? v : u;
      if (next == base) {
        // closing edge must also alternate against the first edge
        if (edges.size() >= 2 && m.contains(e) != first_in && vertex > second_vertex) {
          edges.push_back(e);
          record();
          edges.pop_back();
        }
        return;
      }
      if (next < base || on_path[next]) return;
      on_path[next] = 1;
      edges.push_back(e);
      extend(next, first_in, m.contains(e));
      edges.pop_back();
      on_path[next] = 0;
    });
  }

  void run() {
    on_path.assign(g.vertex_count(), 0);
    for (base = 0; base < g.vertex_count(); ++base) {
      on_path[base] = 1;
      g.edges_at(base).for_each([&](int e) {
        auto [u, v] = g.edge_endpoints(e);
        int next = u == base ? v : u;
        if (next < base) return;
        second_vertex = next;
        on_path[next] = 1;
        edges.push_back(e);
        extend(next, m.contains(e), m.contains(e));
        edges.pop_back();
        on_path[next] = 0;
      });
      on_path[base] = 0;
    }
  }
};

}  // namespace

std::vector<alternating_structure> enumerate_good_paths(const matching& m) {
  structure_collector sink{m.owner(), m, {}};
  const auto saturated = saturation_flags(m);
  path_search search{m.owner(), m, saturated, sink, {}, {}};
  search.run();
  return sink.take();
}

std::vector<alternating_structure> enumerate_good_cycles(const matching& m) {
  structure_collector sink{m.owner(), m, {}};
  cycle_search search{m.owner(), m, sink, {}, {}, 0, 0};
  search.run();
  return sink.take();
}

degree_breakdown degree_of_matching(const matching& m) {
  degree_breakdown d;
  for (const auto& s : enumerate_good_paths(m)) {
    switch (s.kind) {
      case structure_kind::oo_path: ++d.nu_oo; break;
      case structure_kind::cc_path: ++d.nu_cc; break;
      case structure_kind::oc_path: ++d.nu_oc; break;
      case structure_kind::good_cycle: break;
    }
  }
  d.nu_cycles = static_cast<std::int64_t>(enumerate_good_cycles(m).size());
  d.total = d.nu_oo + d.nu_cc + d.nu_oc + d.nu_cycles;
  return d;
}

std::vector<matching> neighbors_of_matching(const matching& m) {
  std::vector<matching> out;
  auto swap_along = [&](const alternating_structure& s) {
    edge_set mask = m.edges();
    for (int e : s.edges) {
      if (mask.test(e))
        mask.reset(e);
      else
        mask.set(e);
    }
    out.emplace_back(m.owner(), std::move(mask));
  };
  for (const auto& s : enumerate_good_paths(m)) swap_along(s);
  for (const auto& s : enumerate_good_cycles(m)) swap_along(s);
  return out;
}

}  // namespace matchpoly
