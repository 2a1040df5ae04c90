#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catmouse {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected connected graph on vertices 0..n-1.
// Neighbor lists are sorted ascending.
class Graph {
 public:
  // Validates the edge list; throws InputError on self-loops, duplicate edges,
  // out-of-range endpoints or a disconnected result.
  Graph(int n, std::span<const Edge> edges);

  int n() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  // v itself or a neighbor of v.
  bool in_closed_neighborhood(Vertex v, Vertex w) const { return v == w || adjacent(v, w); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n(); }

  // Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

// Edge-list text: header "n m", then m lines "u v". Lines starting with '#'
// and blank lines are ignored. Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text);

// Writes the header and edges sorted by (min endpoint, max endpoint).
std::string write_graph(const Graph& g);

}  // namespace catmouse
