#pragma once

#include <string>
#include <string_view>

#include "matchpoly/graph.hpp"

namespace matchpoly {

// Decodes a graph6 code. The optional ">>graph6<<" prefix and trailing
// newline are accepted. Vertices are labeled by their decimal index.
graph parse_graph6(std::string_view code);

// Encodes a graph in graph6 form: shortest admissible size header, upper
// triangle in column order, zero padding.
std::string emit_graph6(const graph& g);

}  // namespace matchpoly
