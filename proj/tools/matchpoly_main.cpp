// matchpoly: command-line front end for the matching polytope skeleton
// library. Subcommands: analyze, degree, skeleton, verify, min-degree.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchpoly/errors.hpp"
#include "matchpoly/export.hpp"
#include "matchpoly/generators.hpp"
#include "matchpoly/good_structures.hpp"
#include "matchpoly/graph.hpp"
#include "matchpoly/graph6.hpp"
#include "matchpoly/matching.hpp"
#include "matchpoly/skeleton.hpp"
#include "matchpoly/verify.hpp"

namespace {

using namespace matchpoly;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitMatching = 3;
constexpr int kExitCap = 4;

// Matching specifications the user typed that do not name a matching.
struct invalid_matching_spec : std::runtime_error {
  explicit invalid_matching_spec(const std::string& what) : std::runtime_error(what) {}
};

struct options {
  std::string input;
  std::string format = "auto";  // edgelist | graph6 | auto
  std::string output = "text";  // text | json | dot
  std::uint64_t max_vertices = 100000;
  std::string matching_spec;
  std::uint64_t seed = 1;
  std::uint64_t random_count = 0;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw parse_error("cannot open input '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

bool sniff_graph6(const std::string& text) {
  std::string_view first{text};
  if (auto eol = first.find('\n'); eol != std::string_view::npos) first = first.substr(0, eol);
  while (!first.empty() && first.back() == '\r') first.remove_suffix(1);
  if (first.starts_with(">>graph6<<")) return true;
  if (first.empty()) return false;
  for (unsigned char c : first)
    if (c < 63 || c > 126) return false;
  return true;
}

graph load_graph(const options& opts) {
  const std::string text = read_input(opts.input);
  const bool as_graph6 =
      opts.format == "graph6" || (opts.format == "auto" && sniff_graph6(text));
  try {
    return as_graph6 ? parse_graph6(text) : graph::parse_edge_list(text);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());  // structural defects in parsed input
  }
}

std::string trimmed(std::string_view token) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
    token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
    token.remove_suffix(1);
  return std::string(token);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Accepts "e1,e3", "1,3" (1-based canonical indices) or "a-b,c-d"
// (endpoint labels); the two forms cannot be mixed. The empty string is
// the empty matching.
edge_set parse_matching_spec(const graph& g, const std::string& spec) {
  std::vector<std::string> tokens;
  std::string_view rest{spec};
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    tokens.push_back(trimmed(rest.substr(0, comma)));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  if (tokens.size() == 1 && tokens[0].empty()) tokens.clear();

  edge_set mask(g.edge_count());
  bool saw_index = false, saw_descriptor = false;

  auto resolve_descriptor = [&](const std::string& token) {
    // Try every '-' as the separator; label pairs that match no edge are
    // skipped so labels containing dashes still resolve.
    int found = -1;
    for (std::size_t cut = 1; cut + 1 <= token.size(); ++cut) {
      if (token[cut] != '-') continue;
      const std::string a = token.substr(0, cut), b = token.substr(cut + 1);
      int u = -1, v = -1;
      for (int w = 0; w < g.vertex_count(); ++w) {
        if (g.vertex_label(w) == a) u = w;
        if (g.vertex_label(w) == b) v = w;
      }
      if (u < 0 || v < 0) continue;
      const int e = g.edge_between(u, v);
      if (e < 0) continue;
      if (found >= 0 && found != e)
        throw invalid_matching_spec("'" + token + "' is ambiguous");
      found = e;
    }
    if (found < 0) throw invalid_matching_spec("'" + token + "' names no edge of the graph");
    return found;
  };

  for (const std::string& token : tokens) {
    if (token.empty()) throw invalid_matching_spec("empty item in matching specification");
    int e;
    std::string index_part;
    if (token[0] == 'e' && all_digits(token.substr(1)))
      index_part = token.substr(1);
    else if (all_digits(token))
      index_part = token;
    if (!index_part.empty()) {
      saw_index = true;
      const long long k = std::stoll(index_part);
      if (k < 1 || k > g.edge_count())
        throw invalid_matching_spec("edge index " + index_part + " out of range 1.." +
                                    std::to_string(g.edge_count()));
      e = static_cast<int>(k - 1);
    } else {
      saw_descriptor = true;
      e = resolve_descriptor(token);
    }
    if (saw_index && saw_descriptor)
      throw invalid_matching_spec("cannot mix edge indices and endpoint descriptors");
    if (mask.test(e))
      throw invalid_matching_spec("edge '" + token + "' listed twice");
    mask.set(e);
  }
  return mask;
}

matching matching_from_spec(const graph& g, const std::string& spec) {
  edge_set mask = parse_matching_spec(g, spec);
  try {
    return matching(g, std::move(mask));
  } catch (const std::invalid_argument& e) {
    throw invalid_matching_spec(e.what());
  }
}

std::string matching_display(const graph& g, const edge_set& mask) {
  if (mask.none()) return "∅";
  std::string names, descriptors;
  mask.for_each([&](int e) {
    if (!names.empty()) {
      names += ",";
      descriptors += ", ";
    }
    names += g.edge_name(e);
    descriptors += g.edge_descriptor(e);
  });
  return names + " (" + descriptors + ")";
}

ordered_json matching_descriptors(const graph& g, const edge_set& mask) {
  ordered_json out = ordered_json::array();
  mask.for_each([&](int e) { out.push_back(g.edge_descriptor(e)); });
  return out;
}

std::string edge_list_display(const graph& g, const std::vector<int>& edges) {
  if (edges.empty()) return "(none)";
  std::string out;
  for (int e : edges) {
    if (!out.empty()) out += ", ";
    out += g.edge_name(e) + " (" + g.edge_descriptor(e) + ")";
  }
  return out;
}

int run_analyze(const options& opts) {
  const graph g = load_graph(opts);
  const std::uint64_t matchings = count_matchings(g);

  std::vector<int> bonds, pendants;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_bond(e)) bonds.push_back(e);
    if (g.is_pendant_edge(e)) pendants.push_back(e);
  }
  const auto decomposition = g.decompose_stars_triangles();

  std::optional<skeleton_stats> st;
  if (matchings <= opts.max_vertices) st = stats(build_skeleton(g, opts.max_vertices));

  if (opts.output == "json") {
    ordered_json doc;
    doc["graph"] = ordered_json::parse(graph_json(g));
    doc["matchings"] = matchings;
    doc["bonds"] = ordered_json::array();
    for (int e : bonds) doc["bonds"].push_back(g.edge_descriptor(e));
    doc["pendant_edges"] = ordered_json::array();
    for (int e : pendants) doc["pendant_edges"].push_back(g.edge_descriptor(e));
    doc["stars_and_triangles"] = {{"is_stars_and_triangles", decomposition.is_stars_and_triangles},
                                  {"triangles", decomposition.triangle_count},
                                  {"stars", decomposition.star_sizes}};
    doc["skeleton"] = st ? ordered_json::parse(skeleton_stats_json(*st)) : ordered_json(nullptr);
    std::cout << doc.dump() << "\n";
    return 0;
  }

  std::cout << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
  std::cout << "matchings: " << matchings << "\n";
  std::cout << "bonds: " << edge_list_display(g, bonds) << "\n";
  std::cout << "pendant edges: " << edge_list_display(g, pendants) << "\n";
  std::cout << "stars and triangles: ";
  if (decomposition.is_stars_and_triangles) {
    std::cout << "yes (triangles=" << decomposition.triangle_count << " stars=[";
    for (std::size_t i = 0; i < decomposition.star_sizes.size(); ++i)
      std::cout << (i ? "," : "") << decomposition.star_sizes[i];
    std::cout << "])\n";
  } else {
    std::cout << "no\n";
  }
  if (st) {
    std::cout << "skeleton: vertices=" << st->vertex_count << " edges=" << st->edge_count
              << " min_degree=" << st->min_degree << " max_degree=" << st->max_degree
              << " regular=" << (st->is_regular ? "yes" : "no") << "\n";
    std::cout << "degree histogram:";
    for (const auto& [degree, count] : st->degree_histogram)
      std::cout << " " << degree << ":" << count;
    std::cout << "\n";
  } else {
    std::cout << "skeleton: skipped (matchings " << matchings << " exceed cap "
              << opts.max_vertices << ")\n";
  }
  return 0;
}

int run_degree(const options& opts) {
  const graph g = load_graph(opts);
  const matching m = matching_from_spec(g, opts.matching_spec);
  const degree_breakdown breakdown = degree_of_matching(m);
  const bool closed_applies = !has_common_neighbors(m);
  std::optional<closed_form_breakdown> closed;
  if (closed_applies) closed = degree_closed_form(m);

  if (opts.output == "json") {
    ordered_json doc;
    doc["matching"] = matching_descriptors(g, m.edges());
    doc["degree"] = ordered_json::parse(to_json(breakdown));
    doc["closed_form"] = closed ? ordered_json::parse(to_json(*closed)) : ordered_json(nullptr);
    std::cout << doc.dump() << "\n";
    return 0;
  }

  std::cout << "matching: " << matching_display(g, m.edges()) << "\n";
  std::cout << "degree: total=" << breakdown.total << " (oo=" << breakdown.nu_oo
            << " cc=" << breakdown.nu_cc << " oc=" << breakdown.nu_oc
            << " cycles=" << breakdown.nu_cycles << ")\n";
  if (closed) {
    std::cout << "closed form: k=" << closed->free_edge_count << " terms=[";
    for (std::size_t i = 0; i < closed->terms.size(); ++i)
      std::cout << (i ? "," : "") << closed->terms[i];
    std::cout << "] total=" << closed->total << "\n";
  } else {
    std::cout << "closed form: not applicable (matched edges share incident edges)\n";
  }
  return 0;
}

int run_skeleton(const options& opts) {
  const graph g = load_graph(opts);
  const skeleton_graph s = build_skeleton(g, opts.max_vertices);
  if (opts.output == "json")
    std::cout << export_json(s) << "\n";
  else
    std::cout << export_dot(s);
  return 0;
}

int print_report(const verification_report& report) {
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " — " << c.detail << "\n";
    passed += c.passed;
  }
  std::cout << passed << "/" << report.checks.size() << " checks passed\n";
  return report.all_passed() ? 0 : kExitCheckFailed;
}

int run_verify(const options& opts) {
  if (opts.random_count > 0) {
    rng_engine rng(opts.seed);
    std::uint64_t skipped = 0;
    bool all_ok = true;
    for (std::uint64_t i = 1; i <= opts.random_count; ++i) {
      const int n = 6 + static_cast<int>(uniform_below(rng, 3));
      const graph g = random_graph(n, 0.4, rng);
      const std::uint64_t matchings = count_matchings(g);
      std::cout << "graph " << i << ": n=" << g.vertex_count() << " m=" << g.edge_count()
                << " matchings=" << matchings;
      if (matchings > opts.max_vertices) {
        ++skipped;
        std::cout << " — skipped (cap " << opts.max_vertices << ")\n";
        continue;
      }
      const verification_report report = verify_all(g, opts.max_vertices);
      all_ok = all_ok && report.all_passed();
      if (report.all_passed()) {
        std::cout << " — ok\n";
      } else {
        std::cout << "\n";
        for (const auto& c : report.checks)
          if (!c.passed) std::cout << "  FAIL " << c.name << " — " << c.detail << "\n";
      }
    }
    std::cout << "verified " << (opts.random_count - skipped) << " graphs, " << skipped
              << " skipped, " << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return all_ok ? 0 : kExitCheckFailed;
  }

  const graph g = load_graph(opts);
  const verification_report report = verify_all(g, opts.max_vertices);
  if (opts.output == "json") {
    const skeleton_graph s = build_skeleton(g, opts.max_vertices);
    std::cout << export_json(s, report) << "\n";
    return report.all_passed() ? 0 : kExitCheckFailed;
  }
  return print_report(report);
}

// Emits the matchings over the structural (bond or pendant) edges in
// increasing mask order without materializing them.
template <class Fn>
void for_each_structural_matching(const graph& g, const std::vector<int>& structural, Fn&& fn) {
  edge_set mask(g.edge_count());
  std::vector<char> used(g.vertex_count(), 0);
  auto rec = [&](auto&& self, std::size_t limit) -> void {
    fn(static_cast<const edge_set&>(mask));
    for (std::size_t i = 0; i < limit; ++i) {
      const int e = structural[i];
      auto [u, v] = g.edge_endpoints(e);
      if (used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      mask.set(e);
      self(self, i);
      mask.reset(e);
      used[u] = used[v] = 0;
    }
  };
  rec(rec, structural.size());
}

int run_min_degree(const options& opts) {
  const graph g = load_graph(opts);
  std::vector<int> structural;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_bond(e) || g.is_pendant_edge(e)) structural.push_back(e);

  std::vector<std::pair<int, int>> structural_edges;
  for (int e : structural) structural_edges.push_back(g.edge_endpoints(e));
  const std::uint64_t count =
      count_matchings(graph(g.vertex_count(), std::move(structural_edges)));

  // Cross-check against the skeleton whenever it fits under the cap.
  std::string cross_check = "skipped";
  const std::uint64_t total = count_matchings(g);
  if (total <= opts.max_vertices) {
    const skeleton_graph s = build_skeleton(g, opts.max_vertices);
    const skeleton_stats st = stats(s);
    std::vector<edge_set> expected;
    for (std::uint32_t v = 0; v < s.vertex_count(); ++v)
      if (s.degree(v) == st.min_degree) expected.push_back(s.matchings[v]);
    std::vector<edge_set> produced;
    for_each_structural_matching(g, structural,
                                 [&](const edge_set& mask) { produced.push_back(mask); });
    cross_check = (st.min_degree == g.edge_count() && expected == produced) ? "ok" : "FAILED";
  }

  if (opts.output == "json") {
    ordered_json doc;
    doc["graph"] = ordered_json::parse(graph_json(g));
    doc["min_degree"] = g.edge_count();
    doc["count"] = count;
    doc["matchings"] = ordered_json::array();
    for_each_structural_matching(g, structural, [&](const edge_set& mask) {
      doc["matchings"].push_back(matching_descriptors(g, mask));
    });
    doc["cross_check"] = cross_check;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "minimum skeleton degree: " << g.edge_count() << " (the edge count)\n";
    std::cout << "matchings attaining it: " << count << "\n";
    for_each_structural_matching(g, structural, [&](const edge_set& mask) {
      std::cout << matching_display(g, mask) << "\n";
    });
    if (cross_check == "skipped")
      std::cout << "cross-check: skipped (matchings " << total << " exceed cap "
                << opts.max_vertices << ")\n";
    else
      std::cout << "cross-check: " << (cross_check == "ok" ? "skeleton degrees agree"
                                                           : "MISMATCH with skeleton")
                << "\n";
  }
  return cross_check == "FAILED" ? kExitCheckFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching polytope skeleton toolkit"};
  app.require_subcommand(1);
  options opts;

  // opts is shared between subcommands, so per-command output defaults are
  // applied at dispatch (empty string means "command default").
  opts.output.clear();
  auto add_common = [&](CLI::App* sub, bool input_required, const std::string& default_output,
                        const std::vector<std::string>& outputs) {
    auto* input = sub->add_option("input", opts.input, "input file, or - for stdin");
    if (input_required) input->required();
    sub->add_option("--format", opts.format, "input format")
        ->check(CLI::IsMember({"edgelist", "graph6", "auto"}))
        ->capture_default_str();
    sub->add_option("--output", opts.output, "output format")
        ->check(CLI::IsMember(outputs))
        ->default_str(default_output);
    sub->add_option("--max-vertices", opts.max_vertices,
                    "largest matching count a skeleton build may attempt")
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "summarize a graph and its skeleton");
  add_common(analyze, true, "text", {"text", "json"});

  auto* degree = app.add_subcommand("degree", "degree of one matching, counted and in closed form");
  add_common(degree, true, "text", {"text", "json"});
  degree->add_option("--matching", opts.matching_spec,
                     "edges of the matching: 'e1,e3', '1,3' or 'a-b,c-d' (default: empty)");

  auto* skeleton = app.add_subcommand("skeleton", "emit the whole skeleton");
  add_common(skeleton, true, "dot", {"dot", "json"});

  auto* verify = app.add_subcommand("verify", "run every structural check");
  add_common(verify, false, "text", {"text", "json"});
  verify->add_option("--random", opts.random_count,
                     "verify this many seeded random graphs instead of an input");
  verify->add_option("--seed", opts.seed, "seed for --random")->capture_default_str();

  auto* min_degree = app.add_subcommand("min-degree", "list the matchings of minimum degree");
  add_common(min_degree, true, "text", {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze) return run_analyze(opts);
    if (*degree) return run_degree(opts);
    if (*skeleton) return run_skeleton(opts);
    if (*verify) {
      if (opts.random_count == 0 && opts.input.empty()) {
        std::cerr << "error: verify needs an input path or --random N\n";
        return kExitCheckFailed;
      }
      if (opts.random_count > 0 && !opts.input.empty()) {
        std::cerr << "error: --random replaces the input path\n";
        return kExitCheckFailed;
      }
      return run_verify(opts);
    }
    if (*min_degree) return run_min_degree(opts);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const invalid_matching_spec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMatching;
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return 0;
}
