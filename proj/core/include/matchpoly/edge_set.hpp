#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace matchpoly {

// Fixed-width bitmask over the edge indices [0, width) of one graph.
// Matchings, incidence sets and subgraph edge selections are all edge_sets
// whose width is the owning graph's edge count. The numeric value of the
// mask (bit k = canonical edge k) defines the enumeration order used
// throughout.
class edge_set {
 public:
  edge_set() = default;
  explicit edge_set(int width) : width_(width), words_((width + 63) / 64, 0) {}

  int width() const { return width_; }

  bool test(int k) const {
    assert(k >= 0 && k < width_);
    return (words_[k >> 6] >> (k & 63)) & 1;
  }
  void set(int k) {
    assert(k >= 0 && k < width_);
    words_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  void reset(int k) {
    assert(k >= 0 && k < width_);
    words_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  // Index of the lowest set bit, -1 when empty.
  int lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> bits() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int k) { out.push_back(k); });
    return out;
  }

  bool intersects(const edge_set& o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const edge_set& o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  edge_set operator^(const edge_set& o) const { return combine(o, [](auto a, auto b) { return a ^ b; }); }
  edge_set operator|(const edge_set& o) const { return combine(o, [](auto a, auto b) { return a | b; }); }
  edge_set operator&(const edge_set& o) const { return combine(o, [](auto a, auto b) { return a & b; }); }
  edge_set and_not(const edge_set& o) const { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  friend bool operator==(const edge_set&, const edge_set&) = default;

  // Numeric order of the mask value: the highest word is the most
  // significant. Matchings of a graph are enumerated in increasing order
  // under this comparison, starting from the empty mask.
  friend std::strong_ordering operator<=>(const edge_set& a, const edge_set& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(width_);
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  template <class Op>
  edge_set combine(const edge_set& o, Op op) const {
    assert(width_ == o.width_);
    edge_set r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
    return r;
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct edge_set_hash {
  std::size_t operator()(const edge_set& s) const { return s.hash(); }
};

}  // namespace matchpoly
