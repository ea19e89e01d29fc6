#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace srlab {

using Mask = std::uint64_t;

/// Largest vertex label representable in a VertexSet.
inline constexpr int kMaxVertices = 64;

/**
 * A set of vertices drawn from 1..64, stored as a bitmask (vertex v is bit v-1).
 *
 * Iteration yields vertices in increasing order.
 */
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s = s.with(v);
    return s;
  }

  static VertexSet of(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s = s.with(v);
    return s;
  }

  /// The set {1, ..., n}.
  static constexpr VertexSet range(int n) {
    if (n <= 0) return VertexSet{};
    if (n >= 64) return VertexSet{~Mask{0}};
    return VertexSet{(Mask{1} << n) - 1};
  }

  static constexpr Mask bit(int v) { return Mask{1} << (v - 1); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertices && (bits_ & bit(v)) != 0;
  }

  VertexSet with(int v) const {
    check_label(v);
    return VertexSet{bits_ | bit(v)};
  }
  VertexSet without(int v) const {
    check_label(v);
    return VertexSet{bits_ & ~bit(v)};
  }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest vertex; 0 when empty.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest vertex; 0 when empty.
  constexpr int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    Mask rest_ = 0;
  };

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

 private:
  static void check_label(int v) {
    if (v < 1 || v > kMaxVertices) {
      throw std::out_of_range("vertex label " + std::to_string(v) + " outside 1.." +
                              std::to_string(kMaxVertices));
    }
  }

  Mask bits_ = 0;
};

/// Lexicographic order on the sorted vertex lists of two sets ({1,2,3} < {1,3} < {2}).
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const Mask diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const Mask low = diff & (~diff + 1);
  const Mask above = ~((low << 1) - 1);
  if (a.bits() & low) {
    // a has the first differing vertex; b is smaller only if it ran out.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

/// Order-preserving compression: maps the vertices of `s` that lie in `keep` onto 1..|keep|.
inline VertexSet compress(VertexSet s, VertexSet keep) {
  Mask out = 0;
  int pos = 0;
  for (int v : keep) {
    if (s.contains(v)) out |= Mask{1} << pos;
    ++pos;
  }
  return VertexSet{out};
}

/// Inverse of compress: maps 1..|keep| back onto the vertices of `keep`.
inline VertexSet expand(VertexSet s, VertexSet keep) {
  Mask out = 0;
  int pos = 1;
  for (int v : keep) {
    if (s.contains(pos)) out |= VertexSet::bit(v);
    ++pos;
  }
  return VertexSet{out};
}

/// Shifts every vertex label up by `offset`.
inline VertexSet shift(VertexSet s, int offset) {
  if (s.max() + offset > kMaxVertices) throw std::out_of_range("vertex shift exceeds 64 labels");
  return VertexSet{s.bits() << offset};
}

/// All k-subsets of {1..n}, in lexicographic order.
inline std::vector<VertexSet> k_subsets(int n, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(VertexSet::of(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace srlab
