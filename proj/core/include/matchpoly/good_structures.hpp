#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matchpoly/matching.hpp"

namespace matchpoly {

// The alternating paths and cycles that certify skeleton adjacency.
//
// Relative to a matching M, an alternating path is "good" in three cases:
//   oo_path: both pendant edges of the path lie in M;
//   cc_path: both pendant vertices of the path are M-unsaturated;
//   oc_path: one pendant edge lies in M and the pendant vertex at the
//            opposite end is M-unsaturated.
// A good cycle is an M-alternating cycle (even by necessity). Swapping M
// along any good structure yields exactly the matchings adjacent to M.
enum class structure_kind { oo_path, cc_path, oc_path, good_cycle };

struct alternating_structure {
  structure_kind kind;
  std::vector<int> edges;        // traversal order, canonical orientation
  std::vector<char> in_matching; // membership of each traversed edge
};

enum class path_class { oo, cc, oc, not_good };

// Classifies an edge sequence that must form a simple path. Alternation
// and the pendant conditions are part of the classification (not_good when
// they fail); a sequence that is not a path at all is rejected with
// std::invalid_argument.
path_class classify_alternating_path(const matching& m, std::span<const int> path_edges);

// All good paths / cycles for m, deduplicated and canonically oriented,
// sorted lexicographically by edge sequence.
std::vector<alternating_structure> enumerate_good_paths(const matching& m);
std::vector<alternating_structure> enumerate_good_cycles(const matching& m);

// Skeleton degree of a matching, counted structure-by-structure: the
// matchings adjacent to M correspond one-to-one to the good paths and good
// cycles for M.
struct degree_breakdown {
  std::int64_t nu_oo = 0;
  std::int64_t nu_cc = 0;
  std::int64_t nu_oc = 0;
  std::int64_t nu_cycles = 0;
  std::int64_t total = 0;

  std::int64_t path_count() const { return nu_oo + nu_cc + nu_oc; }
  friend bool operator==(const degree_breakdown&, const degree_breakdown&) = default;
};

degree_breakdown degree_of_matching(const matching& m);

// The matchings adjacent to m, obtained by swapping m along each good
// structure (paths first, then cycles, each in enumeration order).
std::vector<matching> neighbors_of_matching(const matching& m);

}  // namespace matchpoly
