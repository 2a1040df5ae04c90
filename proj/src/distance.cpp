#include "catmouse/distance.hpp"

#include <algorithm>

#include "catmouse/errors.hpp"

namespace catmouse {

namespace {

void bfs_into(const Graph& g, Vertex source, int* dist, std::vector<Vertex>& queue) {
  const int n = g.n();
  std::fill(dist, dist + n, -1);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    int du = dist[u] + 1;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = du;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw InputError("source vertex out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.n()));
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  bfs_into(g, source, dist.data(), queue);
  return dist;
}

DistanceOracle::DistanceOracle(std::shared_ptr<const Graph> g) : DistanceOracle(std::move(g), Options{}) {}

DistanceOracle::DistanceOracle(std::shared_ptr<const Graph> g, Options opts)
    : graph_(std::move(g)), opts_(opts) {
  if (!graph_) throw InputError("null graph");
  const int n = graph_->n();
  if (n <= opts_.all_pairs_threshold) {
    const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    matrix_ = std::shared_ptr<int[]>(new int[total]);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
      bfs_into(*graph_, s, matrix_.get() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n), queue);
    }
  }
  if (opts_.lru_rows == 0) opts_.lru_rows = 1;
}

int DistanceOracle::distance(Vertex u, Vertex v) const {
  if (matrix_) {
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n()) + static_cast<std::size_t>(v)];
  }
  return row(u)[v];
}

DistanceRow DistanceOracle::row(Vertex source) const {
  if (!graph_->contains(source)) throw InputError("source vertex out of range");
  const int n = graph_->n();
  if (matrix_) {
    const int* base = matrix_.get() + static_cast<std::size_t>(source) * static_cast<std::size_t>(n);
    return DistanceRow(std::shared_ptr<const int[]>(matrix_, base), n);
  }
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(source);
    if (it != cache_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.pos);
      return DistanceRow(it->second.data, n);
    }
  }
  std::shared_ptr<int[]> fresh(new int[static_cast<std::size_t>(n)]);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  bfs_into(*graph_, source, fresh.get(), queue);
  std::shared_ptr<const int[]> data = fresh;
  std::lock_guard lock(mu_);
  auto it = cache_.find(source);
  if (it != cache_.end()) return DistanceRow(it->second.data, n);
  lru_.push_front(source);
  cache_.emplace(source, Entry{data, lru_.begin()});
  while (cache_.size() > opts_.lru_rows) {
    cache_.erase(lru_.back());
    lru_.pop_back();
  }
  return DistanceRow(std::move(data), n);
}

int DistanceOracle::diameter() const {
  {
    std::lock_guard lock(mu_);
    if (diameter_ >= 0) return diameter_;
  }
  int best = 0;
  for (Vertex s = 0; s < n(); ++s) {
    auto r = row(s).span();
    best = std::max(best, *std::max_element(r.begin(), r.end()));
  }
  std::lock_guard lock(mu_);
  diameter_ = best;
  return best;
}

int diameter(const DistanceOracle& oracle) { return oracle.diameter(); }

RadiusResult set_radius(const DistanceOracle& oracle, std::span<const Vertex> members, Vertex hint) {
  if (members.empty()) throw InputError("radius of an empty vertex set");
  const int n = oracle.n();
  std::vector<Vertex> order(members.begin(), members.end());
  if (hint == kNoVertex || !oracle.graph().contains(hint)) hint = order.front();

  auto full_ecc = [&](Vertex v) {
    auto r = oracle.row(v);
    int e = 0;
    for (Vertex w : order) e = std::max(e, r[w]);
    return e;
  };

  RadiusResult best{full_ecc(hint), hint};
  // Witnesses that reject a candidate move to the front; a handful of extreme
  // members usually rejects every non-optimal center after one lookup.
  for (Vertex v = 0; v < n; ++v) {
    if (v == best.center) continue;
    const int limit = v < best.center ? best.radius : best.radius - 1;
    if (limit < 0) continue;
    auto r = oracle.row(v);
    const int* row = r.data();
    int ecc = 0;
    bool rejected = false;
    for (std::size_t i = 0; i < order.size(); ++i) {
      int d = row[order[i]];
      if (d > limit) {
        if (i > 0) std::swap(order[i], order[i / 2]);
        rejected = true;
        break;
      }
      ecc = std::max(ecc, d);
    }
    if (!rejected) best = {ecc, v};
  }
  return best;
}

std::vector<Vertex> sphere(const DistanceOracle& oracle, Vertex v, int level) {
  if (level < 0) throw InputError("negative sphere level");
  std::vector<Vertex> out;
  auto r = oracle.row(v);
  for (Vertex w = 0; w < oracle.n(); ++w) {
    if (r[w] == level) out.push_back(w);
  }
  return out;
}

}  // namespace catmouse
