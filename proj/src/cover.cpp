#include "catmouse/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "catmouse/errors.hpp"

namespace catmouse {

long long ceil_sqrt(long long x) {
  if (x < 0) throw InputError("ceil_sqrt of a negative number");
  auto s = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
  while (s * s < x) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= x) --s;
  return s;
}

BallCover scattered_cover(const DistanceOracle& oracle, int separation) {
  if (separation < 1) throw InputError("separation must be >= 1");
  BallCover cover;
  cover.separation = separation;
  cover.radius_k = separation - 1;
  std::vector<DistanceRow> rows;
  for (Vertex v = 0; v < oracle.n(); ++v) {
    bool far = std::all_of(rows.begin(), rows.end(), [&](const DistanceRow& r) { return r[v] >= separation; });
    if (far) {
      cover.centers.push_back(v);
      rows.push_back(oracle.row(v));
    }
  }
  return cover;
}

BallCover cover_from_centers(const DistanceOracle& oracle, std::vector<Vertex> centers) {
  if (centers.empty()) throw InputError("cover needs at least one center");
  for (Vertex c : centers) {
    if (!oracle.graph().contains(c)) throw InputError("cover center out of range");
  }
  std::vector<int> nearest(static_cast<std::size_t>(oracle.n()), std::numeric_limits<int>::max());
  int separation = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < centers.size(); ++i) {
    auto r = oracle.row(centers[i]);
    for (Vertex v = 0; v < oracle.n(); ++v) nearest[static_cast<std::size_t>(v)] = std::min(nearest[static_cast<std::size_t>(v)], r[v]);
    for (std::size_t j = 0; j < i; ++j) separation = std::min(separation, r[centers[j]]);
  }
  BallCover cover;
  cover.centers = std::move(centers);
  cover.radius_k = *std::max_element(nearest.begin(), nearest.end());
  cover.separation = cover.centers.size() > 1 ? separation : 1;
  return cover;
}

bool covers(const DistanceOracle& oracle, const BallCover& cover) {
  std::vector<char> hit(static_cast<std::size_t>(oracle.n()), 0);
  for (Vertex c : cover.centers) {
    auto r = oracle.row(c);
    for (Vertex v = 0; v < oracle.n(); ++v) {
      if (r[v] <= cover.radius_k) hit[static_cast<std::size_t>(v)] = 1;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

namespace {

std::optional<int> level_from_row(const DistanceRow& r, int n, int K, std::vector<int>& hist) {
  if (K <= 1) return std::nullopt;
  hist.assign(static_cast<std::size_t>(K), 0);
  for (Vertex w = 0; w < n; ++w) {
    int d = r[w];
    if (d < K) ++hist[static_cast<std::size_t>(d)];
  }
  for (int level = 1; level < K; ++level) {
    if (4LL * hist[static_cast<std::size_t>(level)] < level) return level;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> thin_level(const DistanceOracle& oracle, Vertex v, int K) {
  if (K < 1) throw InputError("K must be >= 1");
  std::vector<int> hist;
  return level_from_row(oracle.row(v), oracle.n(), K, hist);
}

std::vector<std::optional<int>> thin_levels(const DistanceOracle& oracle, int K) {
  if (K < 1) throw InputError("K must be >= 1");
  std::vector<std::optional<int>> out(static_cast<std::size_t>(oracle.n()));
  std::vector<int> hist;
  for (Vertex v = 0; v < oracle.n(); ++v) out[static_cast<std::size_t>(v)] = level_from_row(oracle.row(v), oracle.n(), K, hist);
  return out;
}

}  // namespace catmouse
