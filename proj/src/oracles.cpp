#include "catmouse/oracles.hpp"

#include <algorithm>
#include <limits>

#include "catmouse/distance.hpp"
#include "catmouse/errors.hpp"

namespace catmouse {

// ---- brute-force belief sets ----------------------------------------------

std::vector<std::vector<Vertex>> brute_force_beliefs(const Graph& g, std::span<const Vertex> c,
                                                     std::span<const std::int8_t> b) {
  const int n = g.n();
  if (c.size() < 2) throw InputError("need at least one query");
  const auto horizon = static_cast<long long>(c.size()) - 1;
  if (n > 64 || static_cast<long long>(n) * n * horizon > 40'000'000LL) {
    throw RefusalError("brute-force beliefs refuse n=" + std::to_string(n) + ", horizon=" + std::to_string(horizon));
  }
  if (b.size() < c.size()) throw InputError("bit sequence shorter than query sequence");
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= g.n()) throw InputError("query " + std::to_string(i) + " out of range");
  }

  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  std::vector<std::vector<char>> closed(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) {
    dist[v][v] = 0;
    closed[v][v] = 1;
  }
  for (auto [u, v] : g.edges()) {
    dist[u][v] = dist[v][u] = 1;
    closed[u][v] = closed[v][u] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }

  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(horizon) + 1);
  std::vector<char> reach(static_cast<std::size_t>(n), 1);
  for (int v = 0; v < n; ++v) out[1].push_back(v);
  for (long long i = 2; i <= horizon; ++i) {
    const Vertex cp = c[static_cast<std::size_t>(i - 1)];
    const Vertex cc = c[static_cast<std::size_t>(i)];
    const std::int8_t bit = b[static_cast<std::size_t>(i)];
    if (bit != 0 && bit != 1) throw InputError("bit " + std::to_string(i) + " must be 0 or 1");
    std::vector<char> next(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      if (!reach[u]) continue;
      for (int v = 0; v < n; ++v) {
        if (!closed[u][v]) continue;
        const bool closer = dist[cc][v] <= dist[cp][u];
        if (closer == (bit == 1)) next[v] = 1;
      }
    }
    reach = std::move(next);
    for (int v = 0; v < n; ++v) {
      if (reach[v]) out[static_cast<std::size_t>(i)].push_back(v);
    }
  }
  return out;
}

// ---- minimax ---------------------------------------------------------------

namespace {

constexpr int kMaxSolverN = 10;
constexpr int kMaxSolverHorizon = 8;

void guard(const Graph& g, int horizon) {
  if (horizon < 1) throw InputError("horizon must be >= 1");
  if (g.n() > kMaxSolverN || horizon > kMaxSolverHorizon) {
    throw RefusalError("minimax refuses n=" + std::to_string(g.n()) + ", horizon=" + std::to_string(horizon) +
                       " (limits n<=10, horizon<=8)");
  }
}

// Belief sets as bitmasks over a tiny graph.
struct MaskGame {
  int n = 0;
  std::vector<std::vector<int>> dist;
  std::vector<int> radius;

  explicit MaskGame(const Graph& g) : n(g.n()) {
    for (Vertex v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));
    radius.assign(std::size_t{1} << n, std::numeric_limits<int>::max());
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      int best = std::numeric_limits<int>::max();
      for (int v = 0; v < n; ++v) {
        int ecc = 0;
        for (int w = 0; w < n; ++w) {
          if (mask >> w & 1U) ecc = std::max(ecc, dist[v][w]);
        }
        best = std::min(best, ecc);
      }
      radius[mask] = best;
    }
  }

  std::uint32_t update(std::uint32_t belief, Vertex cp, Vertex cc, Bit bit) const {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      for (int u = 0; u < n; ++u) {
        if (!(belief >> u & 1U) || dist[u][v] > 1) continue;
        if ((dist[cc][v] <= dist[cp][u]) == (bit == 1)) {
          next |= 1U << v;
          break;
        }
      }
    }
    return next;
  }
};

}  // namespace

MinimaxSolver::MinimaxSolver(const Graph& g, int horizon, int d) : n_(g.n()), horizon_(horizon), d_(d) {
  guard(g, horizon);
  MaskGame game(g);
  dist_ = game.dist;
  radius_ = game.radius;
  closed_.assign(static_cast<std::size_t>(n_), 0);
  for (int v = 0; v < n_; ++v) {
    closed_[v] = 1U << v;
    for (Vertex w : g.neighbors(v)) closed_[v] |= 1U << w;
  }
  const std::size_t states = static_cast<std::size_t>(horizon_ + 1) * (std::size_t{1} << n_) * static_cast<std::size_t>(n_);
  memo_.assign(states, -1);
  policy_.assign(states, kNoVertex);

  if (radius(full_set()) <= d_) {
    value_ = GameValue::cat_wins;
    first_ = 0;
    return;
  }
  for (Vertex c1 = 0; c1 < n_; ++c1) {
    if (cat_forces(1, full_set(), c1)) {
      value_ = GameValue::cat_wins;
      first_ = c1;
      return;
    }
  }
}

std::size_t MinimaxSolver::key(int step, std::uint32_t belief, Vertex last) const {
  return (static_cast<std::size_t>(step) * (std::size_t{1} << n_) + belief) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(last);
}

std::uint32_t MinimaxSolver::update(std::uint32_t belief, Vertex c_prev, Vertex c_cur, Bit bit) const {
  std::uint32_t next = 0;
  for (int u = 0; u < n_; ++u) {
    if (!(belief >> u & 1U)) continue;
    const int before = dist_[c_prev][u];
    for (int v = 0; v < n_; ++v) {
      if ((closed_[u] >> v & 1U) && ((dist_[c_cur][v] <= before) == (bit == 1))) next |= 1U << v;
    }
  }
  return next;
}

bool MinimaxSolver::cat_forces(int step, std::uint32_t belief, Vertex last) {
  if (step >= horizon_) return false;
  const auto k = key(step, belief, last);
  if (memo_[k] >= 0) return memo_[k] == 1;
  bool win = false;
  for (Vertex next = 0; next < n_ && !win; ++next) {
    bool all = true;
    for (Bit bit = 0; bit <= 1 && all; ++bit) {
      const std::uint32_t after = update(belief, last, next, bit);
      if (after == 0 || radius(after) <= d_) continue;
      all = cat_forces(step + 1, after, next);
    }
    if (all) {
      win = true;
      policy_[k] = next;
    }
  }
  memo_[k] = win ? 1 : 0;
  return win;
}

Vertex MinimaxSolver::policy(int step, std::uint32_t belief, Vertex last_query) const {
  if (step < 1 || step > horizon_ || belief == 0 || belief > full_set() || last_query < 0 || last_query >= n_) {
    return kNoVertex;
  }
  return policy_[key(step, belief, last_query)];
}

GameValue exhaustive_game_value(const Graph& g, int horizon, int d) { return MinimaxSolver(g, horizon, d).value(); }

Vertex SolverCat::first_query() {
  step_ = 1;
  belief_ = solver_->full_set();
  last_ = solver_->first_query() == kNoVertex ? 0 : solver_->first_query();
  return last_;
}

Vertex SolverCat::next_query(std::optional<Bit> previous) {
  ++step_;
  // b_{step-1} turns M_{step-2} into M_{step-1}
  if (step_ >= 3 && previous) {
    belief_ = solver_->update(belief_, prev_query_, last_, *previous);
  }
  Vertex next = solver_->policy(step_ - 1, belief_, last_);
  if (next == kNoVertex) next = last_;
  prev_query_ = last_;
  last_ = next;
  return next;
}

// ---- universal check for a fixed cat --------------------------------------

namespace {

bool localizes_from(const MaskGame& game, int horizon, int d, int step, std::uint32_t belief, const CatStrategy& cat,
                    Vertex last, std::optional<Bit> last_bit) {
  if (game.radius[belief] <= d) return true;
  if (step >= horizon) return false;
  auto sim = cat.snapshot();
  const Vertex next = sim->query(step + 1, last_bit);
  for (Bit bit = 0; bit <= 1; ++bit) {
    const std::uint32_t after = game.update(belief, last, next, bit);
    if (after == 0) continue;
    if (!localizes_from(game, horizon, d, step + 1, after, *sim, next, bit)) return false;
  }
  return true;
}

}  // namespace

bool cat_always_localizes(const Graph& g, const CatStrategy& cat, int horizon, int d) {
  guard(g, horizon);
  MaskGame game(g);
  auto sim = cat.snapshot();
  const Vertex first = sim->first_query();
  return localizes_from(game, horizon, d, 1, (1U << g.n()) - 1U, *sim, first, std::nullopt);
}

void for_each_lazy_walk(const Graph& g, int steps, const std::function<void(const std::vector<Vertex>&)>& f) {
  if (steps < 1) return;
  std::vector<Vertex> path(static_cast<std::size_t>(steps) + 1, kNoVertex);
  std::function<void(int)> extend = [&](int i) {
    if (i > steps) {
      f(path);
      return;
    }
    const Vertex here = path[static_cast<std::size_t>(i - 1)];
    path[static_cast<std::size_t>(i)] = here;
    extend(i + 1);
    for (Vertex w : g.neighbors(here)) {
      path[static_cast<std::size_t>(i)] = w;
      extend(i + 1);
    }
  };
  for (Vertex v = 0; v < g.n(); ++v) {
    path[1] = v;
    extend(2);
  }
}

}  // namespace catmouse

namespace catmouse {

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 6) throw RefusalError("graph catalog supports 1 <= n <= 6");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const int m = static_cast<int>(slots.size());
  auto slot_of = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    // row-major index of (u, v) with u < v
    return u * n - u * (u + 1) / 2 + (v - u - 1);
  };
  std::vector<std::vector<int>> perm_maps;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    std::vector<int> map(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) map[e] = slot_of(perm[slots[e].first], perm[slots[e].second]);
    perm_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto connected = [&](std::uint32_t mask) {
    std::uint32_t seen = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e = 0; e < m; ++e) {
        if (!(mask >> e & 1U)) continue;
        const std::uint32_t a = 1U << slots[e].first;
        const std::uint32_t b = 1U << slots[e].second;
        if (((seen & a) != 0) != ((seen & b) != 0)) {
          seen |= a | b;
          grew = true;
        }
      }
    }
    return seen == (1U << n) - 1U;
  };

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (!connected(mask)) continue;
    bool canonical = true;
    for (const auto& map : perm_maps) {
      std::uint32_t image = 0;
      for (int e = 0; e < m; ++e) {
        if (mask >> e & 1U) image |= 1U << map[e];
      }
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1U) edges.push_back(slots[e]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace catmouse
