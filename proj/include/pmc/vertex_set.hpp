#pragma once

#include "pmc/errors.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace pmc {

/**
 * Fixed-capacity bit vector over the vertices of one graph.
 *
 * The width is the vertex count of the owning graph; binary operations on
 * sets of different widths are contract violations. Only the first
 * ceil(width/64) words are ever touched.
 */
class VertexSet {
public:
  static constexpr int kMaxVertices = 512;
  static constexpr int kWords = kMaxVertices / 64;

  VertexSet() = default;

  explicit VertexSet(int width) : width_(width) {
    if (width < 0 || width > kMaxVertices)
      throw CapabilityError("vertex set width " + std::to_string(width) +
                            " exceeds supported maximum 512");
  }

  VertexSet(int width, std::initializer_list<int> members) : VertexSet(width) {
    for (int v : members)
      set(v);
  }

  static VertexSet full(int width) {
    VertexSet s(width);
    for (int w = 0; w < s.words(); ++w)
      s.bits_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <class Range>
  static VertexSet from(int width, const Range& members) {
    VertexSet s(width);
    for (int v : members)
      s.set(v);
    return s;
  }

  int width() const { return width_; }

  bool test(int v) const {
    check_index(v);
    return (bits_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) {
    check_index(v);
    bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    check_index(v);
    bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  VertexSet with(int v) const {
    VertexSet r = *this;
    r.set(v);
    return r;
  }
  VertexSet without(int v) const {
    VertexSet r = *this;
    r.reset(v);
    return r;
  }

  int count() const {
    int c = 0;
    for (int w = 0; w < words(); ++w)
      c += std::popcount(bits_[w]);
    return c;
  }
  bool empty() const {
    for (int w = 0; w < words(); ++w)
      if (bits_[w])
        return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Smallest member, or -1.
  int first() const { return next(-1); }

  // Smallest member strictly greater than `after`, or -1.
  int next(int after) const {
    int start = after + 1;
    if (start >= width_)
      return -1;
    int w = start >> 6;
    std::uint64_t word = bits_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (word)
        return (w << 6) + std::countr_zero(word);
      if (++w >= words())
        return -1;
      word = bits_[w];
    }
  }

  bool is_subset_of(const VertexSet& o) const {
    check_width(o);
    for (int w = 0; w < words(); ++w)
      if (bits_[w] & ~o.bits_[w])
        return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    check_width(o);
    for (int w = 0; w < words(); ++w)
      if (bits_[w] & o.bits_[w])
        return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_width(o);
    for (int w = 0; w < words(); ++w)
      bits_[w] &= o.bits_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    check_width(o);
    for (int w = 0; w < words(); ++w)
      bits_[w] |= o.bits_[w];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    check_width(o);
    for (int w = 0; w < words(); ++w)
      bits_[w] ^= o.bits_[w];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_width(o);
    for (int w = 0; w < words(); ++w)
      bits_[w] &= ~o.bits_[w];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement within [0, width).
  VertexSet operator~() const {
    VertexSet r(width_);
    for (int w = 0; w < words(); ++w)
      r.bits_[w] = ~bits_[w];
    r.trim();
    return r;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    if (a.width_ != b.width_)
      return false;
    for (int w = 0; w < a.words(); ++w)
      if (a.bits_[w] != b.bits_[w])
        return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v))
      out.push_back(v);
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(width_);
    for (int w = 0; w < words(); ++w) {
      h ^= bits_[w] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  std::uint64_t word(int w) const { return bits_[w]; }

  class Iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    Iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) { return a.v_ == b.v_; }

  private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  Iterator begin() const { return Iterator(this, first()); }
  Iterator end() const { return Iterator(this, -1); }

private:
  int words() const { return (width_ + 63) >> 6; }

  void trim() {
    if (width_ & 63)
      bits_[words() - 1] &= (std::uint64_t{1} << (width_ & 63)) - 1;
  }

  void check_index(int v) const {
    if (v < 0 || v >= width_)
      throw ContractViolation("vertex " + std::to_string(v) + " out of range for width " +
                              std::to_string(width_));
  }
  void check_width(const VertexSet& o) const {
    if (o.width_ != width_)
      throw ContractViolation("vertex set width mismatch (" + std::to_string(width_) +
                              " vs " + std::to_string(o.width_) + ")");
  }

  int width_ = 0;
  std::array<std::uint64_t, kWords> bits_{};
};

// Canonical order used for every enumerated family: by size, then by the
// sorted member list lexicographically.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb)
    return ca < cb;
  int x = a.first(), y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y)
      return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return false;
}

// Tie-break between equal-weight solutions: the set holding the smallest
// element of the symmetric difference wins. For sets where neither contains
// the other this is the lexicographic order of the sorted member lists, and it
// is stable under adding the same disjoint part to both sides.
inline bool lex_preferred(const VertexSet& a, const VertexSet& b) {
  int m = (a ^ b).first();
  return m >= 0 && a.test(m);
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace pmc

template <>
struct std::hash<pmc::VertexSet> {
  std::size_t operator()(const pmc::VertexSet& s) const { return s.hash(); }
};
