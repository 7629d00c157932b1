#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "matchpoly/graph.hpp"

namespace matchpoly {

using rng_engine = std::mt19937_64;

// Integer in [0, k). Uses a plain modulo map so that sequences are
// reproducible across standard library implementations.
std::uint64_t uniform_below(rng_engine& rng, std::uint64_t k);

// Erdos-Renyi style graph: each of the n*(n-1)/2 pairs is an edge with the
// given probability, drawn in lexicographic pair order.
graph random_graph(int n, double edge_probability, rng_engine& rng);

// Uniform attachment tree: vertex i >= 1 joins a uniformly chosen earlier
// vertex.
graph random_tree(int n, rng_engine& rng);

// Disjoint union of triangles and stars with at most max_edges edges in
// total, with vertex ids shuffled afterwards.
graph random_stars_and_triangles(int max_edges, rng_engine& rng);

// The labeled simple graph on n vertices selected by a bitmask over the
// pairs (0,1),(0,2),...,(n-2,n-1) in lexicographic order; mask ranges over
// [0, 2^(n*(n-1)/2)).
graph graph_from_pair_mask(int n, std::uint64_t mask);

}  // namespace matchpoly
