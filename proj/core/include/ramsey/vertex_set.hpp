#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ramsey {

/// Largest graph order (including a star vertex) that a VertexSet can hold.
inline constexpr int kMaxVertices = 128;

/// Fixed-width bitset over vertex indices [0, kMaxVertices); trivially
/// copyable and allocation free.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;

  static VertexSet range(int first, int last) {
    VertexSet s;
    for (int v = first; v < last; ++v) s.insert(v);
    return s;
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr void insert(int v) { words_[v >> 6] |= bit(v); }
  constexpr void erase(int v) { words_[v >> 6] &= ~bit(v); }
  constexpr bool contains(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

  constexpr int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  constexpr bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Smallest member, or -1 when empty.
  constexpr int first() const {
    for (int i = 0; i < kWords; ++i) {
      if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
    }
    return -1;
  }

  /// Smallest member strictly greater than v, or -1.
  constexpr int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int i = v >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w != 0) return i * 64 + std::countr_zero(w);
      if (++i == kWords) return -1;
      w = words_[i];
    }
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace ramsey
