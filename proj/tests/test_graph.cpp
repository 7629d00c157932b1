#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "matchpoly/errors.hpp"
#include "matchpoly/generators.hpp"
#include "matchpoly/graph.hpp"
#include "test_helpers.hpp"

using namespace matchpoly;
using namespace testutil;

TEST_CASE("graph constructor validates and canonicalizes") {
  SUBCASE("edges are sorted by (min endpoint, max endpoint)") {
    graph g(4, {{3, 2}, {1, 0}, {0, 3}});
    CHECK(g.edge_endpoints(0) == std::pair{0, 1});
    CHECK(g.edge_endpoints(1) == std::pair{0, 3});
    CHECK(g.edge_endpoints(2) == std::pair{2, 3});
    CHECK(g.edge_name(0) == "e1");
    CHECK(g.edge_name(2) == "e3");
  }
  SUBCASE("loops are rejected") {
    CHECK_THROWS_AS(graph(2, {{1, 1}}), std::invalid_argument);
  }
  SUBCASE("duplicate edges are rejected regardless of orientation") {
    CHECK_THROWS_AS(graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  }
  SUBCASE("endpoints out of range are rejected") {
    CHECK_THROWS_AS(graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(graph(2, {{-1, 0}}), std::invalid_argument);
  }
  SUBCASE("default labels are decimal indices") {
    graph g(2, {{0, 1}});
    CHECK(g.vertex_label(0) == "0");
    CHECK(g.edge_descriptor(0) == "0-1");
  }
}

TEST_CASE("edge queries") {
  const graph g = complete_graph(4);
  CHECK(g.edge_count() == 6);
  CHECK(g.edge_between(2, 1) == g.edge_between(1, 2));
  CHECK(g.edge_between(0, 0) == -1);
  CHECK(g.degree(0) == 3);
  CHECK(g.neighbors(2) == std::vector{0, 1, 3});
  CHECK(g.common_neighbors(0, 1) == std::vector{2, 3});
  CHECK(g.common_neighbor_count(0, 1) == 2);

  const graph p = path_graph(3);
  CHECK(p.common_neighbors(0, 2) == std::vector{1});
  CHECK(p.common_neighbor_count(0, 1) == 0);
}

TEST_CASE("incidence structure") {
  const graph g = cycle_graph(4);  // edges e1=(0,1) e2=(0,3) e3=(1,2) e4=(2,3)
  CHECK(g.edges_at(0).bits() == std::vector{0, 1});
  CHECK(g.incident_edges(0).bits() == std::vector{1, 2});
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK_FALSE(g.incident_edges(e).test(e));
    g.incident_edges(e).for_each([&](int f) { CHECK(g.incident_edges(f).test(e)); });
  }
}

TEST_CASE("pendant edges and bonds") {
  SUBCASE("path ends are pendant") {
    const graph p = path_graph(4);
    CHECK(p.is_pendant_edge(0));
    CHECK_FALSE(p.is_pendant_edge(1));
    CHECK(p.is_pendant_edge(2));
    for (int e = 0; e < p.edge_count(); ++e) CHECK_FALSE(p.is_bond(e));
  }
  SUBCASE("every triangle edge of K3 is a bond") {
    const graph t = complete_graph(3);
    for (int e = 0; e < 3; ++e) {
      CHECK(t.is_bond(e));
      CHECK_FALSE(t.is_pendant_edge(e));
    }
  }
  SUBCASE("a triangle with a tail keeps one bond") {
    const graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(paw.is_bond(paw.edge_between(0, 1)));
    CHECK_FALSE(paw.is_bond(paw.edge_between(0, 2)));
    CHECK_FALSE(paw.is_bond(paw.edge_between(1, 2)));
    CHECK_FALSE(paw.is_bond(paw.edge_between(2, 3)));
    CHECK(paw.is_pendant_edge(paw.edge_between(2, 3)));
  }
  SUBCASE("4-cycles have neither") {
    const graph c = cycle_graph(4);
    for (int e = 0; e < c.edge_count(); ++e) {
      CHECK_FALSE(c.is_bond(e));
      CHECK_FALSE(c.is_pendant_edge(e));
    }
  }
  SUBCASE("K4 edges are not bonds") {
    const graph k = complete_graph(4);
    for (int e = 0; e < k.edge_count(); ++e) CHECK_FALSE(k.is_bond(e));
  }
}

TEST_CASE("connected components") {
  const graph g = edge_plus_triangle();
  const auto components = g.connected_components();
  REQUIRE(components.size() == 2);
  CHECK(components[0] == std::vector{0, 1});
  CHECK(components[1] == std::vector{2, 3, 4});

  const graph empty(3, {});
  CHECK(empty.connected_components().size() == 3);
}

TEST_CASE("stars-and-triangles decomposition") {
  SUBCASE("an edge plus a triangle qualifies") {
    const auto d = edge_plus_triangle().decompose_stars_triangles();
    CHECK(d.is_stars_and_triangles);
    CHECK(d.triangle_count == 1);
    CHECK(d.star_sizes == std::vector{1});
  }
  SUBCASE("pure star") {
    const auto d = star_graph(3).decompose_stars_triangles();
    CHECK(d.is_stars_and_triangles);
    CHECK(d.triangle_count == 0);
    CHECK(d.star_sizes == std::vector{3});
  }
  SUBCASE("isolated vertices are immaterial") {
    const graph g(5, {{0, 1}, {0, 2}});  // star plus two isolated vertices
    CHECK(g.decompose_stars_triangles().is_stars_and_triangles);
  }
  SUBCASE("cycles and paths disqualify") {
    CHECK_FALSE(cycle_graph(4).decompose_stars_triangles().is_stars_and_triangles);
    CHECK_FALSE(path_graph(4).decompose_stars_triangles().is_stars_and_triangles);
    CHECK_FALSE(complete_graph(4).decompose_stars_triangles().is_stars_and_triangles);
  }
  SUBCASE("relabeling does not change the verdict") {
    rng_engine rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const graph g = random_stars_and_triangles(12, rng);
      CHECK(g.decompose_stars_triangles().is_stars_and_triangles);
    }
  }
}

TEST_CASE("degree sum equals twice the edge count") {
  rng_engine rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const graph g = random_graph(8, 0.5, rng);
    int sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("parse_edge_list") {
  SUBCASE("labels map in first-seen order, edges canonicalized") {
    const graph g = graph::parse_edge_list("a b\nb c\na c\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge_descriptor(0) == "a-b");
    CHECK(g.edge_descriptor(1) == "a-c");
    CHECK(g.edge_descriptor(2) == "b-c");
  }
  SUBCASE("comments and blank lines are ignored") {
    const graph g = graph::parse_edge_list("# heading\n\na b # trailing\n  \n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("header line is recognized when the edge count matches") {
    const graph g = graph::parse_edge_list("3 2\n1 2\n2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("header may declare extra isolated vertices") {
    const graph g = graph::parse_edge_list("5 2\n1 2\n2 3\n");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.degree(4) == 0);
  }
  SUBCASE("a two-integer first line that is not a header stays an edge") {
    const graph g = graph::parse_edge_list("2 3\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("header with too few vertices is rejected") {
    CHECK_THROWS_AS(graph::parse_edge_list("2 2\n1 2\n2 3\n"), parse_error);
  }
  SUBCASE("loops are reported with their line number") {
    CHECK_THROWS_WITH_AS(graph::parse_edge_list("a b\n\nc c\n"),
                         doctest::Contains("line 3"), parse_error);
  }
  SUBCASE("duplicate edges are reported with their line number") {
    CHECK_THROWS_WITH_AS(graph::parse_edge_list("a b\nb a\n"),
                         doctest::Contains("line 2"), parse_error);
  }
  SUBCASE("wrong token counts are rejected") {
    CHECK_THROWS_AS(graph::parse_edge_list("a\n"), parse_error);
    CHECK_THROWS_AS(graph::parse_edge_list("a b c\n"), parse_error);
  }
  SUBCASE("empty input is the empty graph") {
    const graph g = graph::parse_edge_list("");
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
  }
}
