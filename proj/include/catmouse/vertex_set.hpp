#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "catmouse/graph.hpp"

namespace catmouse {

// Fixed-universe bitset over vertex ids 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  int universe() const noexcept { return n_; }

  void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(Vertex v) const {
    return v >= 0 && v < n_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace catmouse
