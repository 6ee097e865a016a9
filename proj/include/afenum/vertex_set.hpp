#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace afenum {

using Vertex = int;

/// Fixed-universe bitset of vertex indices.
///
/// Every binary operation requires both operands to share the same universe
/// size. Ordering is lexicographic on the ascending member lists, so {0,1} <
/// {0,2} and {0} < {0,1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    assert(v >= 0 && static_cast<std::size_t>(v) < universe_);
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v) noexcept {
    assert(v >= 0 && static_cast<std::size_t>(v) < universe_);
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) noexcept {
    assert(v >= 0 && static_cast<std::size_t>(v) < universe_);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  bool is_subset_of(const VertexSet& o) const noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_size(const VertexSet& o) const noexcept {
    assert(universe_ == o.universe_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  // Smallest member, or -1.
  Vertex first() const noexcept { return next_from(0); }
  // Smallest member strictly greater than `v`, or -1.
  Vertex next(Vertex v) const noexcept { return next_from(static_cast<std::size_t>(v) + 1); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  friend bool operator<(const VertexSet& a, const VertexSet& b) noexcept {
    assert(a.universe_ == b.universe_);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      const std::size_t bit = i * 64 + static_cast<std::size_t>(std::countr_zero(diff));
      // The set holding the first differing element is smaller unless the
      // other one ends right there (then the other is a proper prefix).
      const bool a_has = a.contains(static_cast<Vertex>(bit));
      const VertexSet& other = a_has ? b : a;
      const bool other_continues = other.next_from(bit + 1) != -1;
      return a_has ? other_continues : !other_continues;
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  Vertex next_from(std::size_t bit) const noexcept {
    if (bit >= universe_) return -1;
    std::size_t i = bit >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (bit & 63));
    while (true) {
      if (w) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }
  void trim() noexcept {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

// An extension is a vertex set read as a candidate set of accepted arguments.
using Extension = VertexSet;

// Sorts and removes duplicates in place.
inline void canonicalize(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace afenum
