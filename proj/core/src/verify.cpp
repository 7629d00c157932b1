#include "matchpoly/verify.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "matchpoly/export.hpp"
#include "matchpoly/matching.hpp"

namespace matchpoly {

namespace {

std::string plural(std::uint64_t k, const std::string& noun) {
  return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

}  // namespace

verification_report verify_all(const graph& g, std::uint64_t max_vertices) {
  verification_report report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const skeleton_graph s = build_skeleton(g, max_vertices);
  const skeleton_graph oracle = build_skeleton_pairwise(g, max_vertices);
  const skeleton_stats st = stats(s);
  const std::uint32_t count = static_cast<std::uint32_t>(s.vertex_count());

  std::vector<matching> ms;
  ms.reserve(count);
  for (const auto& mask : s.matchings) ms.emplace_back(g, mask);

  // The two adjacency criteria (difference spans a connected subgraph;
  // difference is a single path or cycle) must agree on every pair.
  {
    bool ok = true;
    std::string detail;
    std::uint64_t pairs = 0;
    for (std::uint32_t i = 0; i < count && ok; ++i)
      for (std::uint32_t j = i + 1; j < count && ok; ++j) {
        ++pairs;
        const bool by_walk =
            classify_adjacency(ms[i], ms[j]).kind != witness_kind::not_adjacent;
        const bool by_connectivity = is_adjacent_by_connectivity(ms[i], ms[j]);
        if (by_walk != by_connectivity) {
          ok = false;
          detail = "criteria disagree on " + matching_node_name(s.matchings[i]) + " vs " +
                   matching_node_name(s.matchings[j]);
        }
      }
    add("adjacency_criteria_agree", ok, ok ? plural(pairs, "pair") + " compared" : detail);
  }

  // Swapping along good structures and classifying all pairs must build the
  // same skeleton.
  {
    bool ok = s.adjacency == oracle.adjacency;
    std::string detail = plural(s.edge_count(), "skeleton edge") + " matched";
    if (!ok)
      for (std::uint32_t v = 0; v < count; ++v)
        if (s.adjacency[v] != oracle.adjacency[v]) {
          detail = "neighborhoods of " + matching_node_name(s.matchings[v]) + " differ";
          break;
        }
    add("construction_routes_agree", ok, detail);
  }

  // Adjacent matchings differ in size by at most one, with equality exactly
  // when the difference has evenly many edges.
  {
    bool ok = true;
    std::string detail;
    std::uint64_t edges_checked = 0;
    for (std::uint32_t v = 0; v < count && ok; ++v)
      for (std::uint32_t w : s.adjacency[v]) {
        if (w <= v) continue;
        ++edges_checked;
        const auto witness = classify_adjacency(ms[v], ms[w]);
        const int diff = ms[v].size() - ms[w].size();
        const int expected = witness.edges.size() % 2 == 0 ? 0 : 1;
        if (diff * diff != expected) {
          ok = false;
          detail = "sizes of " + matching_node_name(s.matchings[v]) + " and " +
                   matching_node_name(s.matchings[w]) + " differ by " +
                   std::to_string(diff < 0 ? -diff : diff);
          break;
        }
      }
    add("adjacent_size_difference", ok,
        ok ? plural(edges_checked, "skeleton edge") + " checked" : detail);
  }

  // The empty matching is adjacent to exactly the single-edge matchings.
  {
    const std::int64_t d = s.degree(0);
    add("empty_matching_degree", d == g.edge_count(),
        "degree of the empty matching is " + std::to_string(d) + ", edge count is " +
            std::to_string(g.edge_count()));
  }

  // Counting good structures must reproduce every pairwise degree.
  {
    bool ok = true;
    std::string detail;
    for (std::uint32_t v = 0; v < count; ++v) {
      const auto breakdown = degree_of_matching(ms[v]);
      if (breakdown.total != oracle.degree(v)) {
        ok = false;
        detail = matching_node_name(s.matchings[v]) + " counts " +
                 std::to_string(breakdown.total) + " structures but has pairwise degree " +
                 std::to_string(oracle.degree(v));
        break;
      }
    }
    add("structure_degree_matches_skeleton", ok, ok ? plural(count, "matching") + " checked" : detail);
  }

  // Where no two matched edges share incident edges, the closed form gives
  // the degree, there are no good cycles, and every good path is short
  // (at most three edges, at most one of them matched).
  {
    bool form_ok = true, cycles_ok = true, paths_ok = true;
    std::string form_detail, cycles_detail, paths_detail;
    std::uint64_t applicable = 0;
    for (std::uint32_t v = 0; v < count; ++v) {
      if (has_common_neighbors(ms[v])) continue;
      ++applicable;
      const std::string name = matching_node_name(s.matchings[v]);
      if (form_ok) {
        const auto closed = degree_closed_form(ms[v]);
        if (closed.total != s.degree(v)) {
          form_ok = false;
          form_detail = name + " closed form gives " + std::to_string(closed.total) +
                        ", degree is " + std::to_string(s.degree(v));
        }
      }
      if (cycles_ok && !enumerate_good_cycles(ms[v]).empty()) {
        cycles_ok = false;
        cycles_detail = name + " has a good cycle";
      }
      if (paths_ok)
        for (const auto& p : enumerate_good_paths(ms[v])) {
          int matched = 0;
          for (char c : p.in_matching) matched += c;
          if (p.edges.size() > 3 || matched > 1) {
            paths_ok = false;
            paths_detail = name + " has a good path with " +
                           plural(p.edges.size(), "edge") + ", " +
                           std::to_string(matched) + " matched";
            break;
          }
        }
    }
    const std::string suffix = plural(applicable, "applicable matching");
    add("closed_form_degree", form_ok, form_ok ? suffix : form_detail);
    add("no_shared_incidence_no_cycles", cycles_ok, cycles_ok ? suffix : cycles_detail);
    add("no_shared_incidence_short_paths", paths_ok, paths_ok ? suffix : paths_detail);
  }

  // Degrees never decrease along matching inclusion.
  {
    bool ok = true;
    std::string detail;
    std::uint64_t pairs = 0;
    for (std::uint32_t i = 0; i < count && ok; ++i)
      for (std::uint32_t j = 0; j < count && ok; ++j) {
        if (i == j || !s.matchings[i].is_subset_of(s.matchings[j])) continue;
        ++pairs;
        if (s.degree(i) > s.degree(j)) {
          ok = false;
          detail = matching_node_name(s.matchings[i]) + " (degree " +
                   std::to_string(s.degree(i)) + ") is contained in " +
                   matching_node_name(s.matchings[j]) + " (degree " +
                   std::to_string(s.degree(j)) + ")";
        }
      }
    add("degree_monotone_under_inclusion", ok, ok ? plural(pairs, "nested pair") + " checked" : detail);
  }

  // The minimum skeleton degree equals the number of edges of the graph.
  add("min_degree_equals_edge_count", st.min_degree == g.edge_count(),
      "minimum degree " + std::to_string(st.min_degree) + ", edge count " +
          std::to_string(g.edge_count()));

  // A single-edge matching has minimum degree exactly when its edge is a
  // bond or a pendant edge.
  {
    bool ok = true;
    std::string detail;
    std::uint64_t singles = 0;
    for (std::uint32_t v = 0; v < count; ++v) {
      if (ms[v].size() != 1) continue;
      ++singles;
      const int e = s.matchings[v].lowest();
      const bool structural = g.is_bond(e) || g.is_pendant_edge(e);
      if (structural != (s.degree(v) == g.edge_count())) {
        ok = false;
        detail = "edge " + g.edge_descriptor(e) + " has degree " +
                 std::to_string(s.degree(v)) +
                 (structural ? " despite being" : " without being") + " a bond or pendant edge";
        break;
      }
    }
    add("single_edge_min_degree_iff_bond_or_pendant", ok,
        ok ? plural(singles, "single-edge matching") + " checked" : detail);
  }

  // A matching has minimum degree exactly when all its edges are bonds or
  // pendant edges (the empty matching included).
  {
    bool ok = true;
    std::string detail;
    for (std::uint32_t v = 0; v < count; ++v) {
      const bool structural = is_min_degree_matching(ms[v]);
      if (structural != (s.degree(v) == st.min_degree)) {
        ok = false;
        detail = matching_node_name(s.matchings[v]) + " has degree " +
                 std::to_string(s.degree(v)) + " but the structural test says " +
                 (structural ? "minimum" : "not minimum");
        break;
      }
    }
    add("min_degree_characterization", ok, ok ? plural(count, "matching") + " checked" : detail);
  }

  // The skeleton is regular exactly when every component of the graph is a
  // star or a triangle, and then it is edge-count-regular.
  {
    const bool predicted = predict_regular(g);
    bool ok = predicted == st.is_regular &&
              (!st.is_regular || st.min_degree == g.edge_count());
    add("regular_iff_stars_and_triangles", ok,
        std::string("predicted ") + (predicted ? "regular" : "irregular") + ", observed degrees in [" +
            std::to_string(st.min_degree) + ", " + std::to_string(st.max_degree) + "]");
  }

  add("skeleton_connected", is_connected(s),
      std::to_string(count) + " vertices, " + plural(s.edge_count(), "edge"));

  return report;
}

}  // namespace matchpoly
