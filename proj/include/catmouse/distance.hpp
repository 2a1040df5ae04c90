#pragma once

#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "catmouse/graph.hpp"

namespace catmouse {

// Single-source BFS. Throws InputError when source is out of range.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// A row of single-source distances that stays valid while the handle lives,
// even if the oracle evicts it from its cache.
class DistanceRow {
 public:
  DistanceRow() = default;
  explicit DistanceRow(std::shared_ptr<const int[]> data, int n) : data_(std::move(data)), n_(n) {}
  int operator[](Vertex v) const { return data_[static_cast<std::size_t>(v)]; }
  std::span<const int> span() const { return {data_.get(), static_cast<std::size_t>(n_)}; }
  const int* data() const { return data_.get(); }

 private:
  std::shared_ptr<const int[]> data_;
  int n_ = 0;
};

// Shortest-path metric of a graph. Graphs up to all_pairs_threshold vertices
// get the full matrix at construction; larger graphs fill single-source rows on
// demand into a mutex-guarded LRU cache. Either way concurrent readers always
// see correct distances.
class DistanceOracle {
 public:
  struct Options {
    int all_pairs_threshold = 4096;
    std::size_t lru_rows = 512;
  };

  explicit DistanceOracle(std::shared_ptr<const Graph> g);
  DistanceOracle(std::shared_ptr<const Graph> g, Options opts);

  DistanceOracle(const DistanceOracle&) = delete;
  DistanceOracle& operator=(const DistanceOracle&) = delete;

  const Graph& graph() const noexcept { return *graph_; }
  std::shared_ptr<const Graph> graph_ptr() const noexcept { return graph_; }
  int n() const noexcept { return graph_->n(); }
  bool all_pairs() const noexcept { return static_cast<bool>(matrix_); }

  int distance(Vertex u, Vertex v) const;
  DistanceRow row(Vertex source) const;

  // Exact eccentricity-based diameter; cached after the first call.
  int diameter() const;

 private:
  std::shared_ptr<const Graph> graph_;
  Options opts_;
  std::shared_ptr<int[]> matrix_;

  mutable std::mutex mu_;
  mutable std::list<Vertex> lru_;
  struct Entry {
    std::shared_ptr<const int[]> data;
    std::list<Vertex>::iterator pos;
  };
  mutable std::unordered_map<Vertex, Entry> cache_;
  mutable int diameter_ = -1;
};

struct RadiusResult {
  int radius = 0;
  Vertex center = kNoVertex;
  friend bool operator==(const RadiusResult&, const RadiusResult&) = default;
};

// rad_G(W): min over all v in V of max over w in W of d(v, w). The center
// ranges over the whole graph; ties go to the lowest vertex id. `hint` seeds
// the search with a good upper bound (e.g. the previous step's center) and
// does not change the result. Throws InputError for empty W.
RadiusResult set_radius(const DistanceOracle& oracle, std::span<const Vertex> members,
                        Vertex hint = kNoVertex);

int diameter(const DistanceOracle& oracle);

// Vertices at distance exactly `level` from v, ascending.
std::vector<Vertex> sphere(const DistanceOracle& oracle, Vertex v, int level);

}  // namespace catmouse
