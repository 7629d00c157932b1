#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "matchpoly/errors.hpp"
#include "matchpoly/good_structures.hpp"

namespace matchpoly {

// The skeleton of the matching polytope of a graph: one vertex per
// matching, edges between matchings whose symmetric difference is a single
// path or cycle. Vertices are indexed in increasing mask order, so index 0
// is always the empty matching.
struct skeleton_graph {
  const graph* source = nullptr;
  std::vector<edge_set> matchings;
  std::vector<std::vector<std::uint32_t>> adjacency;  // sorted neighbor ids

  std::uint64_t vertex_count() const { return matchings.size(); }
  std::uint64_t edge_count() const;
  std::int64_t degree(std::uint32_t v) const { return static_cast<std::int64_t>(adjacency[v].size()); }

  // Vertex id of a matching mask; throws std::invalid_argument when the
  // mask is not a matching of the source graph.
  std::uint32_t index_of(const edge_set& mask) const;

  std::unordered_map<edge_set, std::uint32_t, edge_set_hash> index;
};

// Builds the skeleton by enumerating matchings and swapping along good
// structures. Counts matchings first and throws cap_exceeded when the
// count is larger than max_vertices. The result is checked for symmetry.
skeleton_graph build_skeleton(const graph& g, std::uint64_t max_vertices = 100000);

// Independent construction: classifies every pair of matchings directly.
// Quadratic; meant as an oracle for build_skeleton on small graphs.
skeleton_graph build_skeleton_pairwise(const graph& g, std::uint64_t max_vertices = 100000);

// Closed form for the degree of a matching none of whose edge pairs share
// incident edges: degree = k + sum over matched edges uv of
// (deg(u) * deg(v) - common_neighbors(u, v)), where k counts the edges of
// the graph with both endpoints unsaturated.
struct closed_form_breakdown {
  std::int64_t free_edge_count = 0;   // k
  std::vector<std::int64_t> terms;    // per matched edge, canonical order
  std::int64_t total = 0;
};

// Throws std::invalid_argument when the matching has common neighbors
// (the closed form does not apply).
closed_form_breakdown degree_closed_form(const matching& m);

// Whether m attains the minimum skeleton degree, decided structurally: the
// empty matching always does, and otherwise every edge of m must be a bond
// or a pendant edge. No skeleton is built.
bool is_min_degree_matching(const matching& m);

// Whether the skeleton is regular, decided from the source graph alone:
// this happens exactly when every connected component is a star or a
// triangle (isolated vertices are immaterial).
bool predict_regular(const graph& g);

struct skeleton_stats {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  std::map<std::int64_t, std::uint64_t> degree_histogram;
  bool is_regular = true;
};

skeleton_stats stats(const skeleton_graph& s);

bool is_connected(const skeleton_graph& s);

}  // namespace matchpoly
