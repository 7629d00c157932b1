#include "matchpoly/export.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace matchpoly {

using ordered_json = nlohmann::ordered_json;

std::string matching_node_name(const edge_set& mask) {
  if (mask.none()) return "∅";
  std::string name;
  mask.for_each([&](int e) {
    if (!name.empty()) name.push_back(',');
    name += "e" + std::to_string(e + 1);
  });
  return name;
}

std::string export_dot(const skeleton_graph& s) {
  std::string out = "graph skeleton {\n";
  std::vector<std::string> names;
  names.reserve(s.vertex_count());
  for (const auto& mask : s.matchings) {
    names.push_back(matching_node_name(mask));
    out += "  \"" + names.back() + "\";\n";
  }
  for (std::uint32_t v = 0; v < s.vertex_count(); ++v)
    for (std::uint32_t w : s.adjacency[v])
      if (v < w) out += "  \"" + names[v] + "\" -- \"" + names[w] + "\";\n";
  out += "}\n";
  return out;
}

namespace {

ordered_json graph_fragment(const graph& g) {
  ordered_json edges = ordered_json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_endpoints(e);
    edges.push_back({g.vertex_label(u), g.vertex_label(v)});
  }
  return ordered_json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

ordered_json stats_fragment(const skeleton_stats& st) {
  ordered_json histogram = ordered_json::object();
  for (const auto& [degree, count] : st.degree_histogram)
    histogram[std::to_string(degree)] = count;
  return ordered_json{{"vertices", st.vertex_count}, {"edges", st.edge_count},
                      {"min_degree", st.min_degree}, {"max_degree", st.max_degree},
                      {"regular", st.is_regular},   {"degree_histogram", histogram}};
}

ordered_json checks_fragment(const verification_report& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return checks;
}

}  // namespace

std::string graph_json(const graph& g) { return graph_fragment(g).dump(); }

std::string skeleton_stats_json(const skeleton_stats& st) { return stats_fragment(st).dump(); }

std::string export_json(const skeleton_graph& s) {
  ordered_json doc{{"graph", graph_fragment(*s.source)}, {"skeleton", stats_fragment(stats(s))}};
  return doc.dump();
}

std::string export_json(const skeleton_graph& s, const verification_report& report) {
  ordered_json doc{{"graph", graph_fragment(*s.source)},
                   {"skeleton", stats_fragment(stats(s))},
                   {"checks", checks_fragment(report)}};
  return doc.dump();
}

std::string to_json(const degree_breakdown& b) {
  return ordered_json{{"nu_oo", b.nu_oo}, {"nu_cc", b.nu_cc}, {"nu_oc", b.nu_oc},
                      {"nu_cycles", b.nu_cycles}, {"total", b.total}}
      .dump();
}

std::string to_json(const closed_form_breakdown& b) {
  return ordered_json{{"k", b.free_edge_count}, {"terms", b.terms}, {"total", b.total}}.dump();
}

std::string to_json(const graph& g, const alternating_structure& s) {
  const char* kind = s.kind == structure_kind::oo_path   ? "oo"
                     : s.kind == structure_kind::cc_path ? "cc"
                     : s.kind == structure_kind::oc_path ? "oc"
                                                         : "cycle";
  ordered_json edges = ordered_json::array();
  for (int e : s.edges) edges.push_back(g.edge_descriptor(e));
  return ordered_json{{"kind", kind}, {"edges", edges}}.dump();
}

}  // namespace matchpoly
