#pragma once

#include <string>

#include "matchpoly/good_structures.hpp"
#include "matchpoly/skeleton.hpp"
#include "matchpoly/verify.hpp"

namespace matchpoly {

// Name of a skeleton vertex: the 1-based canonical edge indices of the
// matching, "e1,e3", or U+2205 for the empty matching.
std::string matching_node_name(const edge_set& mask);

// Graphviz rendering of the skeleton: node declarations in vertex order,
// then one line per edge with endpoints in index order. Deterministic.
std::string export_dot(const skeleton_graph& s);

// {"graph": {...}, "skeleton": {...}} and, with a report,
// {"graph": {...}, "skeleton": {...}, "checks": [...]}. Compact JSON with
// keys in schema order.
std::string export_json(const skeleton_graph& s);
std::string export_json(const skeleton_graph& s, const verification_report& report);

// Reusable fragments for tools composing larger documents.
std::string graph_json(const graph& g);
std::string skeleton_stats_json(const skeleton_stats& st);

std::string to_json(const degree_breakdown& b);
std::string to_json(const closed_form_breakdown& b);
std::string to_json(const graph& g, const alternating_structure& s);

}  // namespace matchpoly
