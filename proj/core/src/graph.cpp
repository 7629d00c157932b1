#include "matchpoly/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "matchpoly/errors.hpp"

namespace matchpoly {

graph::graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : n_(vertex_count) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (labels.empty()) {
    labels.reserve(n_);
    for (int v = 0; v < n_; ++v) labels.push_back(std::to_string(v));
  }
  if (static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);

  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("loop edge at vertex " + labels_[u]);
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge in edge list");
  edges_ = std::move(edges);

  const int m = edge_count();
  adjacency_.resize(n_);
  vertex_edges_.assign(n_, edge_set(m));
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges_[e];
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    vertex_edges_[u].set(e);
    vertex_edges_[v].set(e);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  edge_incidence_.reserve(m);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges_[e];
    edge_set inc = vertex_edges_[u] | vertex_edges_[v];
    inc.reset(e);
    edge_incidence_.push_back(std::move(inc));
  }
}

int graph::edge_between(int u, int v) const {
  if (u == v) return -1;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
  if (it != edges_.end() && *it == std::pair{u, v})
    return static_cast<int>(it - edges_.begin());
  return -1;
}

std::vector<int> graph::common_neighbors(int u, int v) const {
  std::vector<int> out;
  std::set_intersection(adjacency_[u].begin(), adjacency_[u].end(),
                        adjacency_[v].begin(), adjacency_[v].end(),
                        std::back_inserter(out));
  return out;
}

int graph::common_neighbor_count(int u, int v) const {
  return static_cast<int>(common_neighbors(u, v).size());
}

bool graph::is_pendant_edge(int e) const {
  auto [u, v] = edges_[e];
  return degree(u) == 1 || degree(v) == 1;
}

bool graph::is_bond(int e) const {
  auto [u, v] = edges_[e];
  return degree(u) == 2 && degree(v) == 2 && common_neighbor_count(u, v) == 1;
}

std::vector<std::vector<int>> graph::connected_components() const {
  std::vector<std::vector<int>> components;
  std::vector<char> seen(n_, 0);
  std::vector<int> queue;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.assign(1, s);
    std::vector<int> comp;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (int w : adjacency_[v])
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

stars_triangles_decomposition graph::decompose_stars_triangles() const {
  stars_triangles_decomposition d;
  d.is_stars_and_triangles = true;
  for (const auto& comp : connected_components()) {
    const int size = static_cast<int>(comp.size());
    if (size == 1) continue;  // isolated vertices carry no matchings
    int comp_edges = 0;
    int max_deg = 0;
    for (int v : comp) {
      comp_edges += degree(v);
      max_deg = std::max(max_deg, degree(v));
    }
    comp_edges /= 2;
    if (size == 3 && comp_edges == 3) {
      ++d.triangle_count;
    } else if (comp_edges == size - 1 && max_deg == size - 1) {
      // a tree with one center adjacent to everything else: a star
      d.star_sizes.push_back(size - 1);
    } else {
      d.is_stars_and_triangles = false;
    }
  }
  std::sort(d.star_sizes.begin(), d.star_sizes.end());
  if (!d.is_stars_and_triangles) {
    d.triangle_count = 0;
    d.star_sizes.clear();
  }
  return d;
}

std::string graph::edge_descriptor(int e) const {
  auto [u, v] = edges_[e];
  return labels_[u] + "-" + labels_[v];
}

std::string graph::edge_name(int e) const { return "e" + std::to_string(e + 1); }

namespace {

struct data_row {
  int line_no;
  std::string a, b;
};

bool is_unsigned_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

[[noreturn]] void fail(int line_no, const std::string& message) {
  throw parse_error("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

graph graph::parse_edge_list(std::string_view text) {
  std::vector<data_row> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::istringstream tokens{std::string(line)};
    std::string a, b, extra;
    if (!(tokens >> a)) continue;  // blank or comment-only line
    if (!(tokens >> b)) fail(line_no, "expected two tokens 'u v'");
    if (tokens >> extra) fail(line_no, "expected two tokens 'u v', got more");
    rows.push_back({line_no, std::move(a), std::move(b)});
  }

  // Header rule: a leading "n m" line of two integers is a header exactly
  // when the remaining rows number m.
  bool has_header = false;
  long long header_n = 0;
  if (!rows.empty() && is_unsigned_integer(rows[0].a) && is_unsigned_integer(rows[0].b)) {
    try {
      long long n = std::stoll(rows[0].a);
      long long m = std::stoll(rows[0].b);
      if (m == static_cast<long long>(rows.size()) - 1) {
        if (n > 100'000'000) throw parse_error("header vertex count too large");
        has_header = true;
        header_n = n;
      }
    } catch (const std::out_of_range&) {
      // numeric tokens too large for a header; treat the line as an edge
    }
  }

  std::unordered_map<std::string, int> index_of_label;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;

  auto vertex_of = [&](const std::string& label) {
    auto [it, inserted] = index_of_label.try_emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  for (std::size_t i = has_header ? 1 : 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    int u = vertex_of(row.a);
    int v = vertex_of(row.b);
    if (u == v) fail(row.line_no, "loop edge '" + row.a + " " + row.b + "'");
    std::pair<int, int> key = std::minmax(u, v);
    if (!seen.insert(key).second)
      fail(row.line_no, "duplicate edge '" + row.a + " " + row.b + "'");
    edges.emplace_back(u, v);
  }

  int n = static_cast<int>(labels.size());
  if (has_header) {
    if (header_n < n)
      throw parse_error("header declares " + std::to_string(header_n) +
                        " vertices but the edges use " + std::to_string(n) +
                        " distinct labels");
    // Vertices the edges never mention are isolated; label them by index,
    // prefixing underscores until the label is unused.
    for (int v = n; v < header_n; ++v) {
      std::string label = std::to_string(v);
      while (index_of_label.contains(label)) label.insert(label.begin(), '_');
      index_of_label.emplace(label, static_cast<int>(v));
      labels.push_back(std::move(label));
    }
    n = static_cast<int>(header_n);
  }

  return graph(n, std::move(edges), std::move(labels));
}

}  // namespace matchpoly
