#include "matchpoly/skeleton.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matchpoly/matching.hpp"

namespace matchpoly {

std::uint64_t skeleton_graph::edge_count() const {
  std::uint64_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

std::uint32_t skeleton_graph::index_of(const edge_set& mask) const {
  auto it = index.find(mask);
  if (it == index.end())
    throw std::invalid_argument("mask is not a matching of the source graph");
  return it->second;
}

namespace {

skeleton_graph enumerate_vertices(const graph& g, std::uint64_t max_vertices) {
  const std::uint64_t total = count_matchings(g);
  if (total > max_vertices) throw cap_exceeded(total, max_vertices);

  skeleton_graph s;
  s.source = &g;
  s.matchings.reserve(total);
  s.index.reserve(total);
  matching_stream stream(g);
  while (auto mask = stream.next()) {
    s.index.emplace(*mask, static_cast<std::uint32_t>(s.matchings.size()));
    s.matchings.push_back(std::move(*mask));
  }
  s.adjacency.resize(s.matchings.size());
  return s;
}

void require_symmetric(const skeleton_graph& s) {
  for (std::uint32_t v = 0; v < s.vertex_count(); ++v)
    for (std::uint32_t w : s.adjacency[v])
      if (!std::binary_search(s.adjacency[w].begin(), s.adjacency[w].end(), v))
        throw std::logic_error("skeleton adjacency is not symmetric");
}

}  // namespace

skeleton_graph build_skeleton(const graph& g, std::uint64_t max_vertices) {
  skeleton_graph s = enumerate_vertices(g, max_vertices);
  for (std::uint32_t v = 0; v < s.vertex_count(); ++v) {
    matching m(g, s.matchings[v]);
    std::vector<std::uint32_t>& nbrs = s.adjacency[v];
    for (const matching& other : neighbors_of_matching(m))
      nbrs.push_back(s.index_of(other.edges()));
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::logic_error("duplicate skeleton neighbor");
  }
  require_symmetric(s);
  return s;
}

skeleton_graph build_skeleton_pairwise(const graph& g, std::uint64_t max_vertices) {
  skeleton_graph s = enumerate_vertices(g, max_vertices);
  std::vector<matching> ms;
  ms.reserve(s.matchings.size());
  for (const auto& mask : s.matchings) ms.emplace_back(g, mask);
  for (std::uint32_t i = 0; i < s.vertex_count(); ++i)
    for (std::uint32_t j = i + 1; j < s.vertex_count(); ++j)
      if (classify_adjacency(ms[i], ms[j]).kind != witness_kind::not_adjacent) {
        s.adjacency[i].push_back(j);
        s.adjacency[j].push_back(i);
      }
  return s;
}

closed_form_breakdown degree_closed_form(const matching& m) {
  if (has_common_neighbors(m))
    throw std::invalid_argument(
        "closed form requires a matching whose edges share no incident edges");

  const graph& g = m.owner();
  const auto saturated = saturation_flags(m);

  closed_form_breakdown r;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_endpoints(e);
    if (!saturated[u] && !saturated[v]) ++r.free_edge_count;
  }
  r.total = r.free_edge_count;
  m.edges().for_each([&](int e) {
    auto [u, v] = g.edge_endpoints(e);
    const std::int64_t term = static_cast<std::int64_t>(g.degree(u)) * g.degree(v) -
                              g.common_neighbor_count(u, v);
    r.terms.push_back(term);
    r.total += term;
  });
  return r;
}

bool is_min_degree_matching(const matching& m) {
  const graph& g = m.owner();
  bool ok = true;
  m.edges().for_each([&](int e) {
    if (!g.is_bond(e) && !g.is_pendant_edge(e)) ok = false;
  });
  return ok;
}

bool predict_regular(const graph& g) {
  return g.decompose_stars_triangles().is_stars_and_triangles;
}

skeleton_stats stats(const skeleton_graph& s) {
  skeleton_stats st;
  st.vertex_count = s.vertex_count();
  st.edge_count = s.edge_count();
  bool first = true;
  for (const auto& nbrs : s.adjacency) {
    const std::int64_t d = static_cast<std::int64_t>(nbrs.size());
    ++st.degree_histogram[d];
    if (first) {
      st.min_degree = st.max_degree = d;
      first = false;
    } else {
      st.min_degree = std::min(st.min_degree, d);
      st.max_degree = std::max(st.max_degree, d);
    }
  }
  st.is_regular = st.min_degree == st.max_degree;
  return st;
}

bool is_connected(const skeleton_graph& s) {
  if (s.vertex_count() == 0) return true;
  std::vector<char> seen(s.vertex_count(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::uint64_t reached = 0;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (std::uint32_t w : s.adjacency[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return reached == s.vertex_count();
}

}  // namespace matchpoly
