#pragma once

#include <optional>
#include <vector>

#include "catmouse/distance.hpp"

namespace catmouse {

// Centers u_1..u_L whose radius-k balls cover the graph.
struct BallCover {
  std::vector<Vertex> centers;
  int radius_k = 0;
  // Minimum pairwise center distance the cover was built with (1 if unknown).
  int separation = 1;

  int count() const noexcept { return static_cast<int>(centers.size()); }
};

// Greedy maximal scattered set: scan ids ascending, keep v if it is at least
// `separation` from every kept center. radius_k = separation - 1.
BallCover scattered_cover(const DistanceOracle& oracle, int separation);

// Cover with the given centers and the smallest radius that covers V.
BallCover cover_from_centers(const DistanceOracle& oracle, std::vector<Vertex> centers);

// True when every vertex lies within radius_k of some center.
bool covers(const DistanceOracle& oracle, const BallCover& cover);

// Smallest level with 1 <= level < K and 4*|sphere(v, level)| < level.
std::optional<int> thin_level(const DistanceOracle& oracle, Vertex v, int K);

// thin_level for every vertex, one histogram pass per row.
std::vector<std::optional<int>> thin_levels(const DistanceOracle& oracle, int K);

// Smallest integer s with s*s >= x, for x >= 0.
long long ceil_sqrt(long long x);

}  // namespace catmouse
