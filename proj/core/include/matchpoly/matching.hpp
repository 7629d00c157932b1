#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matchpoly/edge_set.hpp"
#include "matchpoly/graph.hpp"

namespace matchpoly {

// A set of pairwise vertex-disjoint edges of one graph (the empty set
// included). Identified with its edge mask over the canonical edge order.
class matching {
 public:
  // Validates disjointness; reports the first offending edge pair.
  matching(const graph& g, edge_set edges);

  static matching from_edge_ids(const graph& g, std::span<const int> edge_ids);

  const graph& owner() const { return *owner_; }
  const edge_set& edges() const { return edges_; }
  int size() const { return edges_.count(); }
  bool contains(int e) const { return edges_.test(e); }

  friend bool operator==(const matching& a, const matching& b) {
    return a.owner_ == b.owner_ && a.edges_ == b.edges_;
  }

 private:
  const graph* owner_;
  edge_set edges_;
};

// Streams every matching of a graph exactly once, in increasing numeric
// order of the edge mask; the first mask produced is always the empty one.
// Memory use is O(n + m) regardless of how many matchings exist.
class matching_stream {
 public:
  explicit matching_stream(const graph& g);

  // The next mask, or nullopt once exhausted.
  std::optional<edge_set> next();

 private:
  struct frame {
    int next_candidate;  // lowest edge id not yet tried at this node
    int limit;           // candidates are restricted to ids below this
  };

  const graph* g_;
  edge_set mask_;
  std::vector<char> used_;   // vertex saturation under mask_
  std::vector<int> chosen_;  // edge added by each non-root frame
  std::vector<frame> stack_;
  bool root_emitted_ = false;
};

std::vector<matching> enumerate_matchings(const graph& g);

// Counts matchings without enumerating them, by the deletion recursion
// count(G) = count(G - e) + count(G - {u, v}) on the lowest remaining edge.
// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t count_matchings(const graph& g);

// Vertices covered by a matching edge, ascending.
std::vector<int> saturated_vertices(const matching& m);
// Per-vertex saturation flags.
std::vector<char> saturation_flags(const matching& m);

// Edges in exactly one of the two matchings. Both must belong to the same
// graph.
edge_set symmetric_difference(const matching& a, const matching& b);

enum class witness_kind { path, even_cycle, not_adjacent };

// Certificate for skeleton adjacency of two matchings: the edges of their
// symmetric difference, in traversal order, when they form a single path
// or a single (necessarily even) cycle.
//
// Canonical form: a path is oriented so that its first edge id is lower
// than its last; a cycle starts at its lowest edge id and proceeds toward
// the lower of that edge's two neighbors in the cycle.
struct adjacency_witness {
  witness_kind kind = witness_kind::not_adjacent;
  std::vector<int> edges;
};

// Two matchings are adjacent on the matching polytope exactly when their
// symmetric difference is a single path or cycle; this classifies the
// difference and returns the traversal as a certificate.
adjacency_witness classify_adjacency(const matching& a, const matching& b);

// Independent adjacency test: the symmetric difference is nonempty and
// spans a connected subgraph. Decided with a union-find, sharing no logic
// with classify_adjacency.
bool is_adjacent_by_connectivity(const matching& a, const matching& b);

// True when two distinct matched edges have incident edge sets that
// intersect, i.e. some edge of the graph touches both.
bool has_common_neighbors(const matching& m);

}  // namespace matchpoly
