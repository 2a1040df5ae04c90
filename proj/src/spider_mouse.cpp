#include "catmouse/spider_mouse.hpp"

#include <algorithm>
#include <stdexcept>

#include "catmouse/errors.hpp"

namespace catmouse {

const char* to_string(SpiderStage stage) {
  switch (stage) {
    case SpiderStage::setup:
      return "setup";
    case SpiderStage::drift:
      return "drift";
    case SpiderStage::run_in:
      return "run_in";
    case SpiderStage::run_out:
      return "run_out";
  }
  return "?";
}

SpiderRadialPlan SpiderRadialPlan::start(int t) {
  SpiderRadialPlan plan;
  plan.t = t;
  plan.stage = SpiderStage::drift;
  plan.clock = t / 6;
  plan.mouse_depth = t / 4;
  plan.shadow_depth = t / 4;
  return plan;
}

SpiderRadialPlan::Events SpiderRadialPlan::step(int center_dist_prev, int center_dist_cur) {
  Events ev;
  switch (stage) {
    case SpiderStage::drift:
      // ties move the mouse inward
      if (center_dist_cur <= center_dist_prev) {
        --mouse_depth;
      } else {
        ++shadow_depth;
      }
      if (--clock == 0) {
        drift_result = mouse_depth;
        stage = SpiderStage::run_in;
        clock = mouse_depth;
        ev.ends_drift = true;
      }
      break;
    case SpiderStage::run_in:
      --mouse_depth;
      --shadow_depth;
      if (--clock == 0) {
        stage = SpiderStage::run_out;
        clock = t / 4;
        ev.reaches_center = true;
      }
      break;
    case SpiderStage::run_out:
      ev.leaves_center = clock == t / 4;
      ++mouse_depth;
      ++shadow_depth;
      if (--clock == 0) {
        shadow_depth = t / 4;
        stage = SpiderStage::drift;
        clock = t / 6;
        ev.reanchors = true;
      }
      break;
    case SpiderStage::setup:
      throw std::logic_error("radial plan stepped before setup");
  }
  return ev;
}

std::vector<Vertex> forecast_queries(const DistanceOracle& oracle, const CatStrategy& cat, const ForecastStart& start,
                                     int window) {
  std::vector<Vertex> out;
  if (window <= 0) return out;
  out.reserve(static_cast<std::size_t>(window));
  auto sim = cat.snapshot();
  SpiderRadialPlan plan = start.plan;
  std::optional<Bit> pending = start.pending;
  Vertex prev = start.prev_query;
  for (int k = 0; k < window; ++k) {
    const int step = start.step + k;
    const Vertex c = sim->query(step, pending);
    out.push_back(c);
    if (step >= 2) {
      const int d_prev = oracle.distance(prev, SpiderLayout::center());
      const int d_cur = oracle.distance(c, SpiderLayout::center());
      const int depth_before = plan.mouse_depth;
      plan.step(d_prev, d_cur);
      pending = SpiderRadialPlan::bit_for(d_prev, depth_before, d_cur, plan.mouse_depth);
    }
    prev = c;
  }
  return out;
}

int find_safe_branch(const DistanceOracle& oracle, const SpiderLayout& layout, const CatStrategy& cat,
                     const ForecastStart& start, int window, const std::vector<int>& excluded) {
  if (window < 0 || window >= layout.t() || static_cast<int>(excluded.size()) + window >= layout.t()) {
    throw InputError("safe-branch window " + std::to_string(window) + " with " + std::to_string(excluded.size()) +
                     " exclusions cannot be guaranteed on t=" + std::to_string(layout.t()));
  }
  std::vector<char> blocked(static_cast<std::size_t>(layout.t()) + 2, 0);
  for (int b : excluded) {
    if (b >= 0 && b <= layout.t() + 1) blocked[static_cast<std::size_t>(b)] = 1;
  }
  for (Vertex c : forecast_queries(oracle, cat, start, window)) blocked[static_cast<std::size_t>(layout.branch_of(c))] = 1;
  for (int b = 1; b <= layout.t(); ++b) {
    if (!blocked[static_cast<std::size_t>(b)]) return b;
  }
  throw std::logic_error("no safe branch although the window is shorter than t");
}

SpiderMouse::SpiderMouse(int t) : t_(t) {
  if (t < 12 || t % 12 != 0) throw ConstructionError("spider mouse needs t >= 12 with 12 | t, got " + std::to_string(t));
}

int SpiderMouse::choose(const GameView& view, const ForecastStart& start, int window, const std::vector<int>& excluded,
                        const std::string& reason) {
  int b = find_safe_branch(view.oracle, *layout_, view.cat, start, window, excluded);
  windows_.push_back(ProtectedWindow{b, start.step, start.step + window - 1, reason});
  return b;
}

void SpiderMouse::record(Vertex w) {
  shadow_.push_back(w);
  mouse_branch_log_.push_back(plan_.mouse_depth == 0 ? 0 : mouse_branch_);
  shadow_branch_log_.push_back(shadow_branch_);
}

Vertex SpiderMouse::first_position(const GameView& view) {
  auto extra = spider_extra(view.oracle.graph(), t_);
  if (!extra) throw ConstructionError("graph is not a spider with t=" + std::to_string(t_));
  layout_.emplace(SpiderSpec{t_, *extra});
  plan_ = SpiderRadialPlan::start(t_);
  ForecastStart fs{1, std::nullopt, kNoVertex, plan_};
  const int window = 2 * t_ / 3;
  mouse_branch_ = choose(view, fs, window, {}, "setup-mouse");
  shadow_branch_ = choose(view, fs, window, {mouse_branch_}, "setup-shadow");
  const Vertex m = layout_->vertex_at(mouse_branch_, plan_.mouse_depth);
  stages_.push_back(SpiderStage::setup);
  record(layout_->vertex_at(shadow_branch_, plan_.shadow_depth));
  return m;
}

Vertex SpiderMouse::next_move(const GameView& view) {
  if (!layout_) throw std::logic_error("spider mouse moved before first_position");
  const int step = view.step;
  const Vertex c_prev = view.c[static_cast<std::size_t>(step - 1)];
  const ForecastStart fs{step, view.pending_bit(), c_prev, plan_};
  const Vertex c_cur = view.forecast_query();
  const int d_prev = view.oracle.distance(c_prev, SpiderLayout::center());
  const int d_cur = view.oracle.distance(c_cur, SpiderLayout::center());

  SpiderRadialPlan next = plan_;
  const auto ev = next.step(d_prev, d_cur);
  if (ev.leaves_center) {
    const int window = std::min(11 * t_ / 12, t_ - 2);
    mouse_branch_ = choose(view, fs, window, {shadow_branch_}, "run-out");
  }
  if (ev.reanchors) {
    std::vector<int> excluded{mouse_branch_};
    for (int s = last_center_step_ + 1; s < step; ++s) {
      const int b = layout_->branch_of(view.c[static_cast<std::size_t>(s)]);
      if (b >= 1 && b <= t_) excluded.push_back(b);
    }
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
    shadow_branch_ = choose(view, fs, 2 * t_ / 3, excluded, "reanchor");
    windows_.back().first_step = last_center_step_ + 1;
    ++cycles_;
  }
  if (ev.reaches_center) {
    last_center_step_ = step;
    center_steps_.push_back(step);
  }
  if (ev.ends_drift) {
    drift_end_steps_.push_back(step);
    drift_results_.push_back(next.drift_result);
  }
  stages_.push_back(plan_.stage);
  plan_ = next;
  const Vertex m = layout_->vertex_at(mouse_branch_, plan_.mouse_depth);
  record(layout_->vertex_at(shadow_branch_, plan_.shadow_depth));
  return m;
}

}  // namespace catmouse
