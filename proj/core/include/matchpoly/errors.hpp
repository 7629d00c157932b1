#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matchpoly {

// Input that fails to decode as an edge list or a graph6 code.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A skeleton-sized computation was asked for a graph whose matching count
// exceeds the caller's cap.
struct cap_exceeded : std::runtime_error {
  std::uint64_t matching_count;
  std::uint64_t limit;

  cap_exceeded(std::uint64_t count, std::uint64_t cap)
      : std::runtime_error("graph has " + std::to_string(count) +
                           " matchings, exceeding the cap of " + std::to_string(cap)),
        matching_count(count),
        limit(cap) {}
};

}  // namespace matchpoly
