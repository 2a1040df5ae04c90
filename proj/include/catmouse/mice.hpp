#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "catmouse/rng.hpp"
#include "catmouse/strategy.hpp"

namespace catmouse {

// Stays on a seed-derived vertex.
class StationaryMouse : public MouseStrategy {
 public:
  explicit StationaryMouse(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "stationary:seed=" + std::to_string(seed_); }
  Vertex first_position(const GameView& view) override;
  Vertex next_move(const GameView& view) override;

 private:
  std::uint64_t seed_;
  Vertex home_ = 0;
};

// Seed-derived start, then a uniform step into the sorted closed neighborhood.
class RandomWalkMouse : public MouseStrategy {
 public:
  explicit RandomWalkMouse(std::uint64_t seed) : seed_(seed), rng_(seed, "random-walk") {}
  std::string name() const override { return "rw:seed=" + std::to_string(seed_); }
  Vertex first_position(const GameView& view) override;
  Vertex next_move(const GameView& view) override;

 private:
  std::uint64_t seed_;
  Rng rng_;
};

// Seed-derived start, then the closed-neighborhood vertex farthest from the
// cat's last query (lowest id on ties).
class GreedyAwayMouse : public MouseStrategy {
 public:
  explicit GreedyAwayMouse(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "greedy:seed=" + std::to_string(seed_); }
  Vertex first_position(const GameView& view) override;
  Vertex next_move(const GameView& view) override;

 private:
  std::uint64_t seed_;
};

// Replays a fixed trajectory (1-indexed, index 0 unused); holds the last
// vertex once the script runs out.
class ScriptedMouse : public MouseStrategy {
 public:
  explicit ScriptedMouse(std::vector<Vertex> path) : path_(std::move(path)) {}
  std::string name() const override { return "scripted"; }
  Vertex first_position(const GameView& view) override { return at(view.step); }
  Vertex next_move(const GameView& view) override { return at(view.step); }

 private:
  Vertex at(int step) const {
    auto i = std::min<std::size_t>(static_cast<std::size_t>(step), path_.size() - 1);
    return path_[i];
  }
  std::vector<Vertex> path_;
};

enum class BaselineMouseKind { stationary, random_walk, greedy_away };
std::unique_ptr<MouseStrategy> baseline_mouse(BaselineMouseKind kind, std::uint64_t seed);

// "spider:t=12" | "stationary:seed=1" | "rw:seed=2" | "greedy" | "greedy:seed=3".
// Missing seeds fall back to default_seed. Throws InputError.
std::unique_ptr<MouseStrategy> make_mouse(std::string_view spec, std::uint64_t default_seed = 0);

}  // namespace catmouse
