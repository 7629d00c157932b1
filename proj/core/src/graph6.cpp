#include "matchpoly/graph6.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchpoly/errors.hpp"

namespace matchpoly {

namespace {

constexpr std::string_view kPrefix = ">>graph6<<";
constexpr int kBias = 63;

int value_of(unsigned char byte, std::size_t position) {
  if (byte < 63 || byte > 126)
    throw parse_error("graph6 byte " + std::to_string(position) + " out of range (" +
                      std::to_string(static_cast<int>(byte)) + ")");
  return byte - kBias;
}

}  // namespace

graph parse_graph6(std::string_view code) {
  if (code.starts_with(kPrefix)) code.remove_prefix(kPrefix.size());
  while (!code.empty() && (code.back() == '\n' || code.back() == '\r'))
    code.remove_suffix(1);
  if (code.empty()) throw parse_error("empty graph6 code");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(code[0]) != 126) {
    n = value_of(code[0], 0);
    pos = 1;
  } else if (code.size() >= 2 && static_cast<unsigned char>(code[1]) != 126) {
    if (code.size() < 4) throw parse_error("graph6 size header truncated");
    for (std::size_t i = 1; i < 4; ++i) n = n << 6 | value_of(code[i], i);
    pos = 4;
  } else {
    if (code.size() < 8) throw parse_error("graph6 size header truncated");
    for (std::size_t i = 2; i < 8; ++i) n = n << 6 | value_of(code[i], i);
    pos = 8;
  }

  if (n > 1'000'000'000) throw parse_error("graph6 vertex count too large");

  using u128 = unsigned __int128;
  const u128 bit_count = u128(n) * (n ? n - 1 : 0) / 2;
  const u128 expected_bytes = (bit_count + 5) / 6;
  if (u128(code.size() - pos) != expected_bytes)
    throw parse_error("graph6 body has " + std::to_string(code.size() - pos) +
                      " bytes, expected " + std::to_string(static_cast<std::uint64_t>(expected_bytes)));

  std::vector<std::pair<int, int>> edges;
  const int nv = static_cast<int>(n);
  int bit_index = 0;
  int current = 0;
  for (int j = 1; j < nv; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit_index % 6 == 0) current = value_of(code[pos + bit_index / 6], pos + bit_index / 6);
      if (current >> (5 - bit_index % 6) & 1) edges.emplace_back(i, j);
      ++bit_index;
    }
  }
  return graph(nv, std::move(edges));
}

std::string emit_graph6(const graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
  std::string out;

  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>((n >> shift & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>((n >> shift & 63) + kBias));
  }

  int current = 0;
  int filled = 0;
  const int nv = g.vertex_count();
  for (int j = 1; j < nv; ++j) {
    for (int i = 0; i < j; ++i) {
      current = current << 1 | (g.edge_between(i, j) >= 0 ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + kBias));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((current << (6 - filled)) + kBias));
  return out;
}

}  // namespace matchpoly
