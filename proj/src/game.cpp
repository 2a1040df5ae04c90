#include "catmouse/game.hpp"

#include <stdexcept>

#include "catmouse/errors.hpp"

namespace catmouse {

VertexSet belief_update(const DistanceOracle& oracle, const VertexSet& prev, Vertex c_prev, Vertex c_cur, Bit bit) {
  const Graph& g = oracle.graph();
  if (!g.contains(c_prev) || !g.contains(c_cur)) throw InputError("query vertex out of range");
  auto row_prev = oracle.row(c_prev);
  auto row_cur = oracle.row(c_cur);
  const int* dp = row_prev.data();
  const int* dc = row_cur.data();
  const bool want = bit != 0;
  VertexSet next(g.n());
  prev.for_each([&](Vertex u) {
    const int before = dp[u];
    if ((dc[u] <= before) == want) next.insert(u);
    for (Vertex v : g.neighbors(u)) {
      if ((dc[v] <= before) == want) next.insert(v);
    }
  });
  if (next.empty()) {
    throw IllegalFeedback("no position is consistent with bit " + std::to_string(bit) + " for queries " +
                          std::to_string(c_prev) + " -> " + std::to_string(c_cur));
  }
  return next;
}

Transcript run_game(const DistanceOracle& oracle, CatStrategy& cat, MouseStrategy& mouse, int horizon,
                    const GameOptions& options) {
  if (horizon < 1) throw InputError("horizon must be >= 1");
  const Graph& g = oracle.graph();
  Transcript tr;
  tr.graph_spec = options.graph_spec;
  tr.meta["cat"] = cat.name();
  tr.meta["mouse"] = mouse.name();
  tr.beliefs_tracked = options.track_belief;
  const auto slots = static_cast<std::size_t>(horizon) + 1;
  tr.c.reserve(slots);
  tr.m.reserve(slots);
  tr.b.reserve(slots);
  tr.c.push_back(kNoVertex);
  tr.m.push_back(kNoVertex);
  tr.b.assign(2, -1);
  if (options.track_belief) {
    tr.belief_radius.push_back(-1);
    tr.belief_center.push_back(kNoVertex);
    if (options.record_beliefs) tr.beliefs.emplace_back();
  }

  VertexSet belief;
  Vertex center_hint = kNoVertex;
  int played = 0;
  for (int step = 1; step <= horizon; ++step) {
    GameView view{oracle, cat, step, tr.c, tr.m, tr.b};
    Vertex pos = step == 1 ? mouse.first_position(view) : mouse.next_move(view);
    if (!g.contains(pos)) throw RuleViolation(step, "mouse position " + std::to_string(pos) + " out of range");
    if (step > 1 && !g.in_closed_neighborhood(tr.m.back(), pos)) {
      throw RuleViolation(step, "mouse moved from " + std::to_string(tr.m.back()) + " to non-adjacent " +
                                    std::to_string(pos));
    }
    std::optional<Bit> pending;
    if (step >= 3) pending = static_cast<Bit>(tr.b[static_cast<std::size_t>(step - 1)]);
    Vertex query = cat.query(step, pending);
    if (!g.contains(query)) throw RuleViolation(step, "cat query " + std::to_string(query) + " out of range");
    tr.m.push_back(pos);
    tr.c.push_back(query);
    if (step >= 2) {
      const Vertex c_prev = tr.c[static_cast<std::size_t>(step - 1)];
      const Vertex m_prev = tr.m[static_cast<std::size_t>(step - 1)];
      tr.b.push_back(static_cast<std::int8_t>(feedback_bit(oracle.distance(c_prev, m_prev), oracle.distance(query, pos))));
    }
    played = step;

    if (!options.track_belief) continue;
    if (step == 1) {
      belief = VertexSet::full(g.n());
    } else {
      belief = belief_update(oracle, belief, tr.c[static_cast<std::size_t>(step - 1)], query,
                             static_cast<Bit>(tr.b.back()));
    }
    if (!belief.contains(pos)) {
      throw std::logic_error("step " + std::to_string(step) + ": true mouse position left the belief set");
    }
    auto members = belief.members();
    RadiusResult rad = set_radius(oracle, members, center_hint);
    center_hint = rad.center;
    tr.belief_radius.push_back(rad.radius);
    tr.belief_center.push_back(rad.center);
    if (options.record_beliefs) tr.beliefs.push_back(belief);
    if (options.stop_at_radius && rad.radius <= *options.stop_at_radius) break;
  }
  tr.horizon = played;
  return tr;
}

LocalizationReport localization_report(const Transcript& tr, int d) {
  if (!tr.beliefs_tracked || tr.belief_radius.size() < 2) throw InputError("transcript has no belief radii");
  LocalizationReport rep;
  rep.min_radius = tr.belief_radius[1];
  rep.argmin_step = 1;
  for (std::size_t i = 1; i < tr.belief_radius.size(); ++i) {
    int r = tr.belief_radius[i];
    if (!rep.first_success_step && r <= d) rep.first_success_step = static_cast<int>(i);
    if (r < rep.min_radius) {
      rep.min_radius = r;
      rep.argmin_step = static_cast<int>(i);
    }
  }
  return rep;
}

std::vector<std::int8_t> recompute_bits(const DistanceOracle& oracle, const Transcript& tr) {
  std::vector<std::int8_t> bits(2, -1);
  for (std::size_t i = 2; i < tr.c.size(); ++i) {
    bits.push_back(static_cast<std::int8_t>(
        feedback_bit(oracle.distance(tr.c[i - 1], tr.m[i - 1]), oracle.distance(tr.c[i], tr.m[i]))));
  }
  return bits;
}

}  // namespace catmouse
