#include "matchpoly/matching.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchpoly {

matching::matching(const graph& g, edge_set edges) : owner_(&g), edges_(std::move(edges)) {
  if (edges_.width() != g.edge_count())
    throw std::invalid_argument("edge mask width does not match the graph");
  std::vector<int> owner_of(g.vertex_count(), -1);
  int bad_a = -1, bad_b = -1;
  edges_.for_each([&](int e) {
    auto [u, v] = g.edge_endpoints(e);
    for (int w : {u, v}) {
      if (owner_of[w] >= 0 && bad_a < 0) {
        bad_a = owner_of[w];
        bad_b = e;
      }
      owner_of[w] = e;
    }
  });
  if (bad_a >= 0)
    throw std::invalid_argument("edges " + g.edge_descriptor(bad_a) + " and " +
                                g.edge_descriptor(bad_b) + " share a vertex");
}

matching matching::from_edge_ids(const graph& g, std::span<const int> edge_ids) {
  edge_set mask(g.edge_count());
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument("edge id " + std::to_string(e) + " out of range");
    mask.set(e);
  }
  return matching(g, std::move(mask));
}

matching_stream::matching_stream(const graph& g)
    : g_(&g), mask_(g.edge_count()), used_(g.vertex_count(), 0) {}

std::optional<edge_set> matching_stream::next() {
  if (!root_emitted_) {
    root_emitted_ = true;
    stack_.push_back({0, g_->edge_count()});
    return mask_;  // the empty matching comes first
  }
  while (!stack_.empty()) {
    frame& top = stack_.back();
    int k = top.next_candidate;
    for (; k < top.limit; ++k) {
      auto [u, v] = g_->edge_endpoints(k);
      if (!used_[u] && !used_[v]) break;
    }
    if (k < top.limit) {
      top.next_candidate = k + 1;
      auto [u, v] = g_->edge_endpoints(k);
      used_[u] = used_[v] = 1;
      mask_.set(k);
      chosen_.push_back(k);
      // extensions of this matching may only use lower edge ids, which
      // yields increasing mask order overall
      stack_.push_back({0, k});
      return mask_;
    }
    stack_.pop_back();
    if (!stack_.empty()) {
      int e = chosen_.back();
      chosen_.pop_back();
      auto [u, v] = g_->edge_endpoints(e);
      used_[u] = used_[v] = 0;
      mask_.reset(e);
    }
  }
  return std::nullopt;
}

std::vector<matching> enumerate_matchings(const graph& g) {
  std::vector<matching> out;
  matching_stream stream(g);
  while (auto mask = stream.next()) out.emplace_back(g, std::move(*mask));
  return out;
}

namespace {

std::uint64_t count_from(const graph& g, const edge_set& active) {
  int e = active.lowest();
  if (e < 0) return 1;  // only the empty matching remains
  auto [u, v] = g.edge_endpoints(e);

  edge_set without_edge = active;
  without_edge.reset(e);

  edge_set without_endpoints = active.and_not(g.edges_at(u) | g.edges_at(v));

  std::uint64_t skip = count_from(g, without_edge);
  std::uint64_t take = count_from(g, without_endpoints);
  if (skip > std::numeric_limits<std::uint64_t>::max() - take)
    throw std::overflow_error("matching count exceeds the 64-bit range");
  return skip + take;
}

}  // namespace

std::uint64_t count_matchings(const graph& g) {
  edge_set all(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) all.set(e);
  return count_from(g, all);
}

std::vector<char> saturation_flags(const matching& m) {
  std::vector<char> saturated(m.owner().vertex_count(), 0);
  m.edges().for_each([&](int e) {
    auto [u, v] = m.owner().edge_endpoints(e);
    saturated[u] = saturated[v] = 1;
  });
  return saturated;
}

std::vector<int> saturated_vertices(const matching& m) {
  auto flags = saturation_flags(m);
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(flags.size()); ++v)
    if (flags[v]) out.push_back(v);
  return out;
}

namespace {

void require_same_owner(const matching& a, const matching& b) {
  if (&a.owner() != &b.owner())
    throw std::invalid_argument("matchings belong to different graphs");
}

}  // namespace

edge_set symmetric_difference(const matching& a, const matching& b) {
  require_same_owner(a, b);
  return a.edges() ^ b.edges();
}

adjacency_witness classify_adjacency(const matching& a, const matching& b) {
  require_same_owner(a, b);
  if (a.edges() == b.edges())
    throw std::invalid_argument("matchings must be distinct");

  const graph& g = a.owner();
  const std::vector<int> delta = (a.edges() ^ b.edges()).bits();
  const int k = static_cast<int>(delta.size());

  // Incidence of the difference edges; each vertex meets at most two
  // (one per matching), so two slots suffice.
  std::vector<std::array<int, 2>> at(g.vertex_count(), {-1, -1});
  std::vector<int> touched;
  for (int e : delta) {
    auto [u, v] = g.edge_endpoints(e);
    for (int w : {u, v}) {
      if (at[w][0] < 0) {
        at[w][0] = e;
        touched.push_back(w);
      } else {
        at[w][1] = e;
      }
    }
  }

  // The difference must be one connected piece; walk edge-to-edge.
  std::vector<char> visited_edge(g.edge_count(), 0);
  std::vector<int> stack{delta[0]};
  visited_edge[delta[0]] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    ++reached;
    auto [u, v] = g.edge_endpoints(e);
    for (int w : {u, v})
      for (int f : at[w])
        if (f >= 0 && !visited_edge[f]) {
          visited_edge[f] = 1;
          stack.push_back(f);
        }
  }
  if (reached != k) return {};

  std::vector<int> ends;  // vertices meeting exactly one difference edge
  for (int w : touched)
    if (at[w][1] < 0) ends.push_back(w);

  auto walk = [&](int start_vertex) {
    std::vector<int> seq;
    seq.reserve(k);
    int vertex = start_vertex;
    int prev_edge = -1;
    while (true) {
      int e = (at[vertex][0] != prev_edge) ? at[vertex][0] : at[vertex][1];
      if (e < 0) break;
      seq.push_back(e);
      auto [u, v] = g.edge_endpoints(e);
      vertex = (u == vertex) ? v : u;
      prev_edge = e;
      if (static_cast<int>(seq.size()) == k) break;
    }
    return seq;
  };

  if (ends.size() == 2) {
    std::vector<int> seq = walk(ends[0]);
    std::vector<int> rev(seq.rbegin(), seq.rend());
    return {witness_kind::path, std::min(seq, rev)};
  }
  if (ends.empty()) {
    // a single cycle; rotate to the lowest edge id and pick the direction
    // whose successor is smaller
    std::vector<int> seq = walk(g.edge_endpoints(delta[0]).first);
    const int p = static_cast<int>(std::min_element(seq.begin(), seq.end()) - seq.begin());
    auto index = [&](int i) { return seq[(i % k + k) % k]; };
    std::vector<int> out;
    out.reserve(k);
    const int step = index(p + 1) < index(p - 1) ? 1 : -1;
    for (int i = 0; i < k; ++i) out.push_back(index(p + step * i));
    return {witness_kind::even_cycle, std::move(out)};
  }
  return {};
}

bool is_adjacent_by_connectivity(const matching& a, const matching& b) {
  require_same_owner(a, b);
  const graph& g = a.owner();
  const std::vector<int> delta = (a.edges() ^ b.edges()).bits();
  if (delta.empty()) return false;

  std::vector<int> parent(g.vertex_count(), -1);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  int components = 0;
  for (int e : delta) {
    auto [u, v] = g.edge_endpoints(e);
    for (int w : {u, v})
      if (parent[w] < 0) {
        parent[w] = w;
        ++components;
      }
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components == 1;
}

bool has_common_neighbors(const matching& m) {
  const graph& g = m.owner();
  const std::vector<int> edges = m.edges().bits();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (g.incident_edges(edges[i]).intersects(g.incident_edges(edges[j])))
        return true;
  return false;
}

}  // namespace matchpoly
