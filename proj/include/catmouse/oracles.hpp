#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "catmouse/graph.hpp"
#include "catmouse/strategy.hpp"

namespace catmouse {

// Exact belief sets M_1..M_H (sorted members, index 0 empty) by forward
// reachability over the layered (step, vertex) graph. Uses its own
// Floyd-Warshall metric and adjacency matrix so it shares no code path with
// the engine's incremental update. c and b are 1-indexed like a Transcript.
// Throws RefusalError above n = 64 or n*n*H > 4e7, InputError on bad input.
std::vector<std::vector<Vertex>> brute_force_beliefs(const Graph& g, std::span<const Vertex> c,
                                                     std::span<const std::int8_t> b);

enum class GameValue { cat_wins, mouse_wins };

// Memoized alternating search over (step, belief set, last query): the cat
// picks the next query, an adversary picks any feedback bit that leaves the
// belief set non-empty. Cat wins iff it can force rad(M_i) <= d for some
// i <= horizon. Limited to n <= 10 and horizon <= 8.
class MinimaxSolver {
 public:
  // Throws RefusalError beyond the size guard, InputError for horizon < 1.
  MinimaxSolver(const Graph& g, int horizon, int d);

  GameValue value() const { return value_; }
  int n() const { return n_; }
  int horizon() const { return horizon_; }
  int d() const { return d_; }

  // Winning policy when value() == cat_wins.
  Vertex first_query() const { return first_; }
  // Next query given step i, M_i (bitmask) and c_i; kNoVertex when the state
  // is already localized or not covered by the policy.
  Vertex policy(int step, std::uint32_t belief, Vertex last_query) const;

  std::uint32_t update(std::uint32_t belief, Vertex c_prev, Vertex c_cur, Bit bit) const;
  int radius(std::uint32_t belief) const { return radius_[belief]; }
  std::uint32_t full_set() const { return (1U << n_) - 1U; }

 private:
  bool cat_forces(int step, std::uint32_t belief, Vertex last);
  std::size_t key(int step, std::uint32_t belief, Vertex last) const;

  int n_;
  int horizon_;
  int d_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::uint32_t> closed_;
  std::vector<int> radius_;
  std::vector<std::int8_t> memo_;
  std::vector<Vertex> policy_;
  Vertex first_ = kNoVertex;
  GameValue value_ = GameValue::mouse_wins;
};

GameValue exhaustive_game_value(const Graph& g, int horizon, int d);

// Cat that replays a solver's winning policy, tracking M_i from the bits.
class SolverCat : public CopyableCat<SolverCat> {
 public:
  explicit SolverCat(std::shared_ptr<const MinimaxSolver> solver) : solver_(std::move(solver)) {}
  std::string name() const override { return "minimax"; }
  Vertex first_query() override;
  Vertex next_query(std::optional<Bit> previous) override;

 private:
  std::shared_ptr<const MinimaxSolver> solver_;
  int step_ = 0;
  std::uint32_t belief_ = 0;
  Vertex last_ = 0;
  Vertex prev_query_ = 0;
};

// True iff `cat` reaches rad(M_i) <= d by the horizon against every legal bit
// sequence (equivalently every lazy-walk mouse). Same size guard as the solver.
bool cat_always_localizes(const Graph& g, const CatStrategy& cat, int horizon, int d);

// Every connected graph on n vertices up to isomorphism (n <= 6), each in
// the labelling whose edge bitmask is smallest. Counts 1, 1, 2, 6, 21, 112.
std::vector<Graph> connected_graphs(int n);

// Calls f(path) for every lazy walk of `steps` positions; path is 1-indexed.
void for_each_lazy_walk(const Graph& g, int steps, const std::function<void(const std::vector<Vertex>&)>& f);

}  // namespace catmouse
