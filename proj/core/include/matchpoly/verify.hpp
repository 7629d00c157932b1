#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchpoly/skeleton.hpp"

namespace matchpoly {

struct check_result {
  std::string name;
  bool passed = false;
  std::string detail;  // counts on success, first counterexample on failure
};

struct verification_report {
  std::vector<check_result> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Runs every structural check the library knows against one graph:
// agreement of the two adjacency criteria, agreement of the two skeleton
// constructions, degree identities, minimum-degree and regularity
// characterizations, and skeleton connectivity. Builds the full skeleton;
// throws cap_exceeded when the matching count is above max_vertices.
verification_report verify_all(const graph& g, std::uint64_t max_vertices = 100000);

}  // namespace matchpoly
