#include "catmouse/mice.hpp"

#include <algorithm>

#include "catmouse/errors.hpp"
#include "catmouse/spec_string.hpp"
#include "catmouse/spider_mouse.hpp"

namespace catmouse {

namespace {

Vertex seeded_start(std::uint64_t seed, std::string_view stream, int n) {
  Rng rng(seed, stream);
  return static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
}

}  // namespace

Vertex StationaryMouse::first_position(const GameView& view) {
  home_ = seeded_start(seed_, "stationary", view.oracle.n());
  return home_;
}

Vertex StationaryMouse::next_move(const GameView&) { return home_; }

Vertex RandomWalkMouse::first_position(const GameView& view) {
  return static_cast<Vertex>(rng_.below(static_cast<std::uint64_t>(view.oracle.n())));
}

Vertex RandomWalkMouse::next_move(const GameView& view) {
  const Vertex here = view.m[static_cast<std::size_t>(view.step - 1)];
  auto nbrs = view.oracle.graph().neighbors(here);
  std::vector<Vertex> closed(nbrs.begin(), nbrs.end());
  closed.insert(std::lower_bound(closed.begin(), closed.end(), here), here);
  return closed[rng_.below(closed.size())];
}

Vertex GreedyAwayMouse::first_position(const GameView& view) {
  return seeded_start(seed_, "greedy", view.oracle.n());
}

Vertex GreedyAwayMouse::next_move(const GameView& view) {
  const Vertex here = view.m[static_cast<std::size_t>(view.step - 1)];
  const Vertex cat = view.c[static_cast<std::size_t>(view.step - 1)];
  auto row = view.oracle.row(cat);
  Vertex best = here;
  for (Vertex v : view.oracle.graph().neighbors(here)) {
    if (row[v] > row[best] || (row[v] == row[best] && v < best)) best = v;
  }
  return best;
}

std::unique_ptr<MouseStrategy> baseline_mouse(BaselineMouseKind kind, std::uint64_t seed) {
  switch (kind) {
    case BaselineMouseKind::stationary:
      return std::make_unique<StationaryMouse>(seed);
    case BaselineMouseKind::random_walk:
      return std::make_unique<RandomWalkMouse>(seed);
    case BaselineMouseKind::greedy_away:
      return std::make_unique<GreedyAwayMouse>(seed);
  }
  throw InputError("unknown baseline mouse");
}

std::unique_ptr<MouseStrategy> make_mouse(std::string_view text, std::uint64_t default_seed) {
  SpecString spec = parse_spec_string(text);
  if (spec.kind == "spider") {
    const auto t = spec.get_int("t");
    try {
      return std::make_unique<SpiderMouse>(static_cast<int>(t));
    } catch (const ConstructionError& e) {
      throw InputError("mouse spec '" + spec.text + "': " + e.what());
    }
  }
  const auto seed = spec.get_seed("seed", default_seed);
  if (spec.kind == "stationary") return baseline_mouse(BaselineMouseKind::stationary, seed);
  if (spec.kind == "rw" || spec.kind == "random_walk") return baseline_mouse(BaselineMouseKind::random_walk, seed);
  if (spec.kind == "greedy") return baseline_mouse(BaselineMouseKind::greedy_away, seed);
  throw InputError("unknown mouse kind '" + spec.kind + "'");
}

}  // namespace catmouse
