#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "catmouse/graph.hpp"

namespace catmouse {

// K_{1,t} with every edge subdivided t-1 times, plus an optional padding
// branch of `extra` vertices.
struct SpiderSpec {
  int t = 1;
  int extra = 0;
};

// Fixed id layout: center 0, main branch b (1-based) holds ids
// (b-1)*t + 1 .. b*t ordered outward, padding branch ids t*t+1 .. t*t+extra.
class SpiderLayout {
 public:
  explicit SpiderLayout(SpiderSpec spec) : spec_(spec) {}

  int t() const noexcept { return spec_.t; }
  int extra() const noexcept { return spec_.extra; }
  int n() const noexcept { return spec_.t * spec_.t + 1 + spec_.extra; }
  static constexpr Vertex center() noexcept { return 0; }
  // Branch id of the padding branch (t + 1); only meaningful when extra > 0.
  int padding_branch() const noexcept { return spec_.t + 1; }

  // 0 for the center, 1..t for main branches, t+1 for the padding branch.
  int branch_of(Vertex v) const noexcept {
    if (v == 0) return 0;
    if (v <= spec_.t * spec_.t) return (v - 1) / spec_.t + 1;
    return spec_.t + 1;
  }
  // Distance from the center (1..t on main branches).
  int depth_of(Vertex v) const noexcept {
    if (v == 0) return 0;
    if (v <= spec_.t * spec_.t) return (v - 1) % spec_.t + 1;
    return v - spec_.t * spec_.t;
  }
  // Vertex at `depth` on main branch `branch`; depth 0 is the center.
  Vertex vertex_at(int branch, int depth) const noexcept {
    if (depth == 0) return 0;
    return static_cast<Vertex>((branch - 1) * spec_.t + depth);
  }

 private:
  SpiderSpec spec_;
};

Graph gen_spider(SpiderSpec spec);

// Returns the padding length if g is exactly gen_spider({t, extra}) for some
// extra >= 0; nullopt otherwise.
std::optional<int> spider_extra(const Graph& g, int t);

enum class FamilyKind { path, cycle, grid, random_tree, star };

struct FamilyParams {
  int n = 0;     // path, cycle, random_tree; leaf count for star
  int rows = 0;  // grid
  int cols = 0;  // grid
};

// Deterministic for fixed params + seed. random_tree attaches vertex i to a
// uniformly chosen earlier vertex. Throws InputError for n < 2 or bad params.
Graph gen_family(FamilyKind kind, FamilyParams params, std::uint64_t seed = 0);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_grid(int rows, int cols);
Graph gen_random_tree(int n, std::uint64_t seed);
Graph gen_star(int leaves);

// A graph built from a spec string together with the canonical spec.
struct GeneratedGraph {
  std::shared_ptr<const Graph> graph;
  std::string spec;
  std::optional<SpiderSpec> spider;
};

// Spec strings: "spider:t=12,extra=0", "grid:3x4", "rt:n=100,seed=7",
// "path:n=5", "cycle:n=10", "star:k=3", "file:<path>". Throws InputError.
GeneratedGraph graph_from_spec(std::string_view spec);

}  // namespace catmouse
