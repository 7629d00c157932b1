#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchpoly/edge_set.hpp"

namespace matchpoly {

// Result of classifying a graph into star and triangle components.
struct stars_triangles_decomposition {
  bool is_stars_and_triangles = false;
  int triangle_count = 0;
  std::vector<int> star_sizes;  // t for each star component with t >= 1 rays
};

// Immutable simple undirected graph. Edges carry canonical indices: they
// are sorted lexicographically by (min endpoint, max endpoint) over the
// internal vertex indices, and every edge-indexed structure in the library
// uses that order. Vertices keep the label they had in the input; internal
// indices are assigned in first-seen order by the parsers.
class graph {
 public:
  graph(int vertex_count, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> labels = {});

  // Parses the whitespace edge-list format: one "u v" pair per line,
  // '#' comments, blank lines ignored. An optional first line "n m" is
  // recognized as a header when the remaining line count equals m.
  static graph parse_edge_list(std::string_view text);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::pair<int, int> edge_endpoints(int e) const { return edges_[e]; }
  // Canonical index of the edge joining u and v, or -1.
  int edge_between(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  // Edges incident to vertex v.
  const edge_set& edges_at(int v) const { return vertex_edges_[v]; }
  // Edges sharing an endpoint with edge e, excluding e itself.
  const edge_set& incident_edges(int e) const { return edge_incidence_[e]; }

  std::vector<int> common_neighbors(int u, int v) const;
  int common_neighbor_count(int u, int v) const;

  // Edge with an endpoint of degree 1.
  bool is_pendant_edge(int e) const;
  // Edge uv with deg(u) == deg(v) == 2 and exactly one common neighbor,
  // i.e. the edge of a triangle whose other two sides are its only
  // attachments.
  bool is_bond(int e) const;

  std::vector<std::vector<int>> connected_components() const;
  stars_triangles_decomposition decompose_stars_triangles() const;

  const std::string& vertex_label(int v) const { return labels_[v]; }
  // "u-v" over the original labels, min-label endpoint first by internal
  // index order.
  std::string edge_descriptor(int e) const;
  // "e<k>" with the 1-based canonical index.
  std::string edge_name(int e) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<edge_set> vertex_edges_;
  std::vector<edge_set> edge_incidence_;
  std::vector<std::string> labels_;
};

}  // namespace matchpoly
